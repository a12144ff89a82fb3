// npseq: decide, certify and tabulate the existence of (almost) p-ary nearly
// perfect sequences. stdout carries machine output in the selected format;
// stderr carries diagnostics and progress.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nps/catalog.hpp"
#include "nps/exclusion.hpp"
#include "nps/groupring.hpp"
#include "nps/multiplier.hpp"
#include "nps/search.hpp"
#include "nps/sequence.hpp"

namespace {

constexpr int kExitDecided = 0;
constexpr int kExitError = 1;
constexpr int kExitOpen = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

uint32_t env_threads(uint32_t flag_value) {
    if (const char* e = std::getenv("NPS_THREADS")) {
        int v = std::atoi(e);
        if (v > 0) return uint32_t(v);
    }
    return flag_value;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nearly perfect sequence toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format: json|csv|md|text")
        ->check(CLI::IsMember({"json", "csv", "md", "text"}));

    // check <seqfile> --gamma G
    auto* cmd_check = app.add_subcommand("check", "verify a sequence is an NPS of the given type");
    std::string check_file;
    int64_t check_gamma = 0;
    cmd_check->add_option("seqfile", check_file)->required();
    cmd_check->add_option("--gamma", check_gamma)->required();

    // autocorr <seqfile>
    auto* cmd_autocorr = app.add_subcommand("autocorr", "print the full autocorrelation profile");
    std::string ac_file;
    cmd_autocorr->add_option("seqfile", ac_file)->required();

    // exclude --n N --p P --gamma G --mode pary|almost [--s S]
    auto* cmd_exclude = app.add_subcommand("exclude", "run the non-existence rule pipeline on a cell");
    uint32_t ex_n = 0, ex_p = 0, ex_s = 1;
    int64_t ex_gamma = 0;
    std::string ex_mode = "pary";
    cmd_exclude->add_option("--n", ex_n)->required();
    cmd_exclude->add_option("--p", ex_p)->required();
    cmd_exclude->add_option("--gamma", ex_gamma)->required();
    cmd_exclude->add_option("--mode", ex_mode)->check(CLI::IsMember({"pary", "almost"}))->required();
    cmd_exclude->add_option("--s", ex_s, "zero symbols (almost mode)");

    // dpds <seqfile> --gamma G
    auto* cmd_dpds = app.add_subcommand("dpds", "convert a sequence to its difference set and verify");
    std::string dp_file;
    int64_t dp_gamma = 0;
    cmd_dpds->add_option("seqfile", dp_file)->required();
    cmd_dpds->add_option("--gamma", dp_gamma)->required();

    // orbits --m M --p P --t T
    auto* cmd_orbits = app.add_subcommand("orbits", "orbit partition of Z_m x Z_p under x -> t*x");
    uint32_t or_m = 0, or_p = 0;
    uint64_t or_t = 0;
    cmd_orbits->add_option("--m", or_m)->required();
    cmd_orbits->add_option("--p", or_p)->required();
    cmd_orbits->add_option("--t", or_t)->required();

    // multiplier --n N --p P --t T
    auto* cmd_mult = app.add_subcommand("multiplier", "orbit-cover non-existence proof for almost PS");
    uint32_t mu_n = 0, mu_p = 0;
    uint64_t mu_t = 0, mu_budget = 200'000'000;
    cmd_mult->add_option("--n", mu_n)->required();
    cmd_mult->add_option("--p", mu_p)->required();
    cmd_mult->add_option("--t", mu_t)->required();
    cmd_mult->add_option("--budget", mu_budget, "search node budget");

    // search --n N --p P --gamma G --mode ... [--s S] [--limit C] [--threads W]
    auto* cmd_search = app.add_subcommand("search", "pruned exhaustive search for a witness");
    uint32_t se_n = 0, se_p = 0, se_s = 0, se_threads = 1;
    int64_t se_gamma = 0;
    uint64_t se_limit = 1ull << 33;
    std::string se_mode = "pary";
    cmd_search->add_option("--n", se_n)->required();
    cmd_search->add_option("--p", se_p)->required();
    cmd_search->add_option("--gamma", se_gamma)->required();
    cmd_search->add_option("--mode", se_mode)->check(CLI::IsMember({"pary", "almost"}));
    cmd_search->add_option("--s", se_s, "zero symbols (default 1 in almost mode)");
    cmd_search->add_option("--limit", se_limit, "node budget before aborting");
    cmd_search->add_option("--threads", se_threads, "worker pool width");

    // table --gamma G --mode ... [--nmax 100] [--diff golden.csv]
    auto* cmd_table = app.add_subcommand("table", "regenerate an existence table");
    int64_t tb_gamma = 0;
    std::string tb_mode = "pary", tb_diff;
    uint32_t tb_nmax = 100;
    cmd_table->add_option("--gamma", tb_gamma)->required();
    cmd_table->add_option("--mode", tb_mode)->check(CLI::IsMember({"pary", "almost"}))->required();
    cmd_table->add_option("--nmax", tb_nmax);
    cmd_table->add_option("--diff", tb_diff, "golden CSV to compare against");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_check) {
            nps::Sequence seq = nps::Sequence::parse_text(slurp(check_file));
            bool ok = nps::is_nps(seq, check_gamma);
            if (format == "json")
                std::cout << "{\"nps\":" << (ok ? "true" : "false") << ",\"gamma\":" << check_gamma
                          << "}\n";
            else
                std::cout << "NPS: " << (ok ? "true" : "false") << "\n";
            return kExitDecided;
        }

        if (*cmd_autocorr) {
            nps::Sequence seq = nps::Sequence::parse_text(slurp(ac_file));
            nps::AutocorrProfile prof = nps::autocorrelation(seq);
            if (format == "json") {
                std::cout << "[";
                for (size_t t = 0; t < prof.values.size(); ++t)
                    std::cout << (t ? "," : "") << prof.values[t].to_json();
                std::cout << "]\n";
            } else {
                for (size_t t = 0; t < prof.values.size(); ++t)
                    std::cout << "C(" << t << ") = " << prof.values[t].render() << "\n";
            }
            return kExitDecided;
        }

        if (*cmd_exclude) {
            auto cert = nps::full_exclusion(ex_n, ex_p, ex_gamma, nps::mode_from_name(ex_mode),
                                            ex_mode == "pary" ? 0 : ex_s);
            if (!cert) {
                if (format == "json")
                    std::cout << "{\"excluded\":false}\n";
                else
                    std::cout << "open: no rule fired\n";
                return kExitOpen;
            }
            if (format == "json")
                std::cout << cert->to_json() << "\n";
            else
                std::cout << cert->narrative() << "\n";
            return kExitDecided;
        }

        if (*cmd_dpds) {
            nps::Sequence seq = nps::Sequence::parse_text(slurp(dp_file));
            auto [R, params] = nps::sequence_to_dpds(seq, dp_gamma);
            auto rep = nps::verify_dpds(R, params);
            if (format == "json") {
                std::cout << "{\"params\":{\"m\":" << params.m << ",\"p\":" << params.n_forbidden
                          << ",\"k\":" << params.k << ",\"lambda1\":" << params.lambda1
                          << ",\"lambda2\":" << params.lambda2 << ",\"mu\":" << params.mu
                          << "},\"instance\":" << R.to_json()
                          << ",\"valid\":" << (rep.ok ? "true" : "false") << "}\n";
            } else {
                std::cout << "params: (" << params.m << "," << params.n_forbidden << "," << params.k
                          << "," << params.lambda1 << "," << params.lambda2 << "," << params.mu << ")\n"
                          << "instance: " << R.to_json() << "\n"
                          << "valid: " << (rep.ok ? "true" : "false") << "\n";
                if (!rep.ok) std::cout << "violation: " << rep.violation << "\n";
            }
            return rep.ok ? kExitDecided : kExitError;
        }

        if (*cmd_orbits) {
            nps::OrbitSet os = nps::orbits(or_m, or_p, or_t);
            if (format == "json")
                std::cout << os.census_json() << "\n";
            else
                std::cout << os.render_table();
            return kExitDecided;
        }

        if (*cmd_mult) {
            auto cert = nps::prove_nonexistence_by_multiplier(mu_n, mu_p, mu_t, mu_budget);
            if (!cert) {
                if (format == "json")
                    std::cout << "{\"excluded\":false}\n";
                else
                    std::cout << "open: no infeasibility certificate for t=" << mu_t << "\n";
                return kExitOpen;
            }
            if (format == "json")
                std::cout << cert->to_json() << "\n";
            else
                std::cout << cert->narrative() << "\n" << cert->note << "\n";
            return kExitDecided;
        }

        if (*cmd_search) {
            nps::SearchSpec spec;
            spec.n = se_n;
            spec.p = se_p;
            spec.gamma = se_gamma;
            spec.s = se_mode == "almost" ? std::max(se_s, 1u) : 0;
            spec.limits.max_nodes = se_limit;
            spec.parallel_width = env_threads(se_threads);
            std::mutex progress_mu;
            auto progress = [&](uint64_t nodes, uint64_t done, uint64_t total) {
                std::lock_guard<std::mutex> lk(progress_mu);
                std::cerr << "progress: blocks " << done << "/" << total << ", nodes " << nodes << "\n";
            };
            nps::SearchResult res = nps::search(spec, progress);
            std::string outcome = res.outcome == nps::SearchResult::Outcome::Witness ? "Witness"
                                  : res.outcome == nps::SearchResult::Outcome::ExhaustedNone
                                      ? "ExhaustedNone"
                                      : "Aborted";
            // node and wall-clock counters vary across runs, so they stay on
            // stderr; stdout must be byte-identical for identical invocations
            std::cerr << "nodes=" << res.nodes << " elapsed_ms=" << res.elapsed_ms << "\n";
            if (format == "json") {
                std::cout << "{\"outcome\":\"" << outcome << "\",\"space_size\":" << res.space_size;
                if (res.via_divisibility) std::cout << ",\"via_divisibility\":true";
                if (res.witness) std::cout << ",\"witness\":" << res.witness->to_json();
                std::cout << "}\n";
            } else {
                std::cout << "outcome: " << outcome << "\n";
                std::cout << "space_size: " << res.space_size << "\n";
                if (res.witness) std::cout << "witness:\n" << res.witness->to_text();
            }
            return res.outcome == nps::SearchResult::Outcome::Aborted ? kExitOpen : kExitDecided;
        }

        if (*cmd_table) {
            auto rows = nps::generate_table(tb_gamma, nps::mode_from_name(tb_mode), tb_nmax);
            if (!tb_diff.empty()) {
                auto golden = nps::load_golden_csv(tb_diff);
                auto rep = nps::diff_against_golden(rows, golden);
                std::cout << rep.render();
                return rep.hard_count() == 0 ? kExitDecided : kExitError;
            }
            if (format == "json")
                std::cout << nps::table_json(rows) << "\n";
            else if (format == "md")
                std::cout << nps::table_markdown(rows);
            else
                std::cout << nps::table_csv(rows);
            return kExitDecided;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
