#include "nps/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "nps/groupring.hpp"
#include "nps/multiplier.hpp"
#include "nps/numtheory.hpp"
#include "nps/sequence.hpp"

namespace nps {

std::string status_name(StatusKind k) {
    switch (k) {
        case StatusKind::Exists: return "Exists";
        case StatusKind::NotExists: return "NotExists";
        case StatusKind::Open: return "Open";
    }
    return "?";
}

StatusKind status_from_name(std::string_view s) {
    if (s == "Exists") return StatusKind::Exists;
    if (s == "NotExists") return StatusKind::NotExists;
    if (s == "Open") return StatusKind::Open;
    throw std::invalid_argument("unknown status: " + std::string(s));
}

namespace {

bool f_pary_ps(uint32_t n, uint32_t p) {  // gamma = 0: n = p or n = p^2, odd p
    return p > 2 && (uint64_t(n) == p || uint64_t(n) == uint64_t(p) * p);
}

bool f_pary_gm1(uint32_t n, uint32_t p) {  // gamma = -1: n = q - 1, q a power of p
    uint64_t q = uint64_t(n) + 1;
    while (q % p == 0) q /= p;
    return q == 1;
}

bool f_almost_ps(uint32_t n, uint32_t p) {
    // gamma = 0: n a prime power, p | n-1, odd p. The quotient construction
    // needs gcd(n+1, p) = 1, which rules out exactly p = 2 here (a pair at
    // distance (n+1)/2 would repeat its difference; no such set exists, cf.
    // the clause battery firing on every p = 2 cell).
    return p > 2 && n >= 2 && (uint64_t(n) - 1) % p == 0 && is_prime_power(n);
}

bool f_almost_gm1(uint32_t n, uint32_t p) {  // gamma = -1: n+1 prime, p | n
    return is_prime(uint64_t(n) + 1) && n % p == 0;
}

struct StoredWitness {
    uint32_t n;  // table key: nonzero count
    uint32_t p;
    int64_t gamma;
    Mode mode;
    const char* exponents;  // comma tokens, "z" marks the zero symbol
    const char* provenance;
};

// clang-format off
const StoredWitness kWitnesses[] = {
    {5,  3,  2, Mode::pary,   "2,2,2,2,0",                          "exists (verified witness)"},
    {17, 3,  2, Mode::pary,   "2,2,2,0,2,0,0,1,0,0,2,0,2,2,2,0,0",  "exists (verified witness)"},
    {12, 3,  2, Mode::almost, "z,2,2,2,0,2,1,1,2,0,2,2,2",          "exists (verified witness)"},
    {2,  2, -2, Mode::pary,   "1,0",                                "exists (verified witness)"},
    // found by the search engine, existence stated in [MN09]
    {5,  3, -1, Mode::pary,   "0,1,0,2,2",                          "exists and given in [MN09]"},
    {13, 3,  1, Mode::pary,   "0,0,0,0,1,1,0,1,2,1,0,1,1",          "exists and given in [MN09]"},
    // small gamma = 1 rows absent from the source tabulation; found here
    {4,  3,  1, Mode::pary,   "0,0,0,1",                            "exists (verified witness)"},
    {7,  3,  1, Mode::pary,   "0,0,0,1,0,1,1",                      "exists (verified witness)"},
    // settles a previously open gamma = 2 cell; the exponent-1 support
    // {3,6,8,9,10} is an (11,5,2) difference set
    {11, 3,  2, Mode::pary,   "0,0,0,1,0,0,1,0,1,1,1",              "exists (verified witness)"},
};
// clang-format on

Sequence witness_sequence(const StoredWitness& w) {
    Sequence seq{w.p, {}};
    std::string tok;
    std::stringstream ss{std::string(w.exponents)};
    while (std::getline(ss, tok, ',')) {
        if (tok == "z")
            seq.symbols.push_back(Symbol::zero());
        else
            seq.symbols.push_back(Symbol::root(uint32_t(std::stoul(tok))));
    }
    return seq;
}

const StoredWitness* find_witness(uint32_t n, uint32_t p, int64_t gamma, Mode mode) {
    for (const auto& w : kWitnesses) {
        if (w.n != n || w.p != p || w.gamma != gamma || w.mode != mode) continue;
        static std::mutex mu;
        static std::map<const StoredWitness*, bool> verified;
        std::lock_guard<std::mutex> lk(mu);
        auto it = verified.find(&w);
        if (it == verified.end()) {
            bool ok = is_nps(witness_sequence(w), w.gamma);
            verified.emplace(&w, ok);
            it = verified.find(&w);
        }
        if (!it->second) throw std::logic_error("stored witness failed re-verification");
        return &w;
    }
    return nullptr;
}

struct ExternalFact {
    uint32_t n, p;
    int64_t gamma;
    Mode mode;
    bool exists;
    const char* reason;
};

// p-ary gamma = -1 binary column settled in [JP99]; the almost gamma = -1
// diagonal n = p settled in [CTZ10].
const uint32_t kJp99Exists[] = {3, 7, 11, 15, 19, 23, 31, 35, 43, 47, 59, 67, 71, 79, 83, 99};

bool external_fact(uint32_t n, uint32_t p, int64_t gamma, Mode mode, bool* exists,
                   std::string* reason) {
    if (mode == Mode::pary && gamma == -1 && p == 2) {
        for (uint32_t v : kJp99Exists)
            if (v == n) {
                *exists = true;
                *reason = "exists by [JP99 Corollary 2.8]";
                return true;
            }
        if (n == 73) {
            *exists = false;
            *reason = "not exists by [JP99 Corollary 2.8]";
            return true;
        }
    }
    if (mode == Mode::almost && gamma == -1 && p == n && p > 2 && is_prime(p)) {
        *exists = false;
        *reason = "not exists by [CTZ10 Theorem 7]";
        return true;
    }
    // almost gamma = 0 cells that the clause battery alone does not close;
    // non-existence is inherited from the prior tabulations
    if (mode == Mode::almost && gamma == 0) {
        static const std::pair<uint32_t, uint32_t> kOyy12[] = {
            {12, 11}, {20, 19}, {22, 7},  {24, 23}, {28, 3},  {44, 43}, {45, 11},
            {48, 47}, {50, 7},  {52, 3},  {60, 59}, {68, 67}, {72, 71}, {74, 73},
            {76, 3},  {80, 79}, {84, 83}, {94, 31}, {99, 7},  {100, 3}, {100, 11},
        };
        for (auto& [vn, vp] : kOyy12)
            if (vn == n && vp == p) {
                *exists = false;
                *reason = "not exists by [CTZ10]/[OYY12]";
                return true;
            }
    }
    return false;
}

struct SearchFact {
    uint32_t n, p;
    int64_t gamma;
    Mode mode;
};

// exhaustive-search non-existence results; the starred long rows are
// reproducible via the CLI but are not re-run in the test suites
const SearchFact kSearchFacts[] = {
    {27, 2, -1, Mode::pary},    // long row
    {21, 3, 0, Mode::pary},     // long row; the source credits its clause battery here
    {14, 7, 0, Mode::pary},     // long row; same, 7^13 space exhausted
    {22, 3, 1, Mode::pary},     // long row; previously undecided, 3^21 space exhausted
    {25, 3, 1, Mode::pary},     // long row; previously undecided, 3^24 space exhausted
    {23, 3, 2, Mode::pary},     // long row; previously undecided, 3^22 space exhausted
    {9, 7, 2, Mode::pary},
    {8, 2, 1, Mode::almost},  {8, 3, 1, Mode::almost},  {9, 7, 1, Mode::almost},
    {14, 3, 1, Mode::almost}, {18, 2, 1, Mode::almost}, {32, 2, 1, Mode::almost},  // long row
    {9, 3, 2, Mode::almost},  {21, 3, 2, Mode::almost}, {27, 2, 2, Mode::almost},  // long row
};

struct MultiplierFact {
    uint32_t n, p;
    uint64_t t;
};

const MultiplierFact kMultiplierFacts[] = {
    {63, 31, 3},
    {91, 3, 13},
    {92, 7, 2},
    {93, 23, 3},
};

std::optional<Certificate> multiplier_fact_certificate(uint32_t n, uint32_t p) {
    for (const auto& f : kMultiplierFacts) {
        if (f.n != n || f.p != p) continue;
        static std::mutex mu;
        static std::map<std::pair<uint32_t, uint32_t>, std::optional<Certificate>> cache;
        std::lock_guard<std::mutex> lk(mu);
        auto key = std::make_pair(n, p);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, prove_nonexistence_by_multiplier(n, p, f.t)).first;
        if (!it->second) throw std::logic_error("stored multiplier certificate no longer derivable");
        return it->second;
    }
    return std::nullopt;
}

}  // namespace

std::vector<ConstructionFact> construction_facts() {
    return {
        {0, Mode::pary, "n = p or n = p^2, odd p", "exists by [Pott95 Theorem 2.2.9]/[MaSc95 Theorem 2.3]",
         f_pary_ps},
        {-1, Mode::pary, "n = q-1, q a power of p", "exists by [HK98]", f_pary_gm1},
        {0, Mode::almost, "n a prime power, p | n-1", "exists by [Pott95 Theorem 2.2.12]", f_almost_ps},
        {-1, Mode::almost, "n+1 prime, p | n", "exists by [Pott95 Example 5.3.2]", f_almost_gm1},
    };
}

std::vector<uint32_t> candidate_primes(uint32_t n, int64_t gamma, Mode mode) {
    int64_t d = mode == Mode::pary ? int64_t(n) - gamma : int64_t(n) - gamma - 1;
    if (d < 2) return {};
    std::vector<uint32_t> ps;
    for (auto& pp : factorize(uint64_t(d))) {
        if (mode == Mode::pary && gamma >= 0 && pp.q == 2) continue;  // binary column only in the gamma=-1 table
        if (std::abs(gamma) >= int64_t(n)) continue;
        ps.push_back(uint32_t(pp.q));
    }
    return ps;
}

StatusRow status(uint32_t n, uint32_t p, int64_t gamma, Mode mode) {
    StatusRow row{n, p, gamma, mode, StatusKind::Open, ""};

    // Exists side
    std::optional<std::string> exists_reason;
    for (const auto& f : construction_facts())
        if (f.gamma == gamma && f.mode == mode && f.applies(n, p)) {
            exists_reason = f.provenance;
            break;
        }
    if (!exists_reason)
        if (const StoredWitness* w = find_witness(n, p, gamma, mode)) exists_reason = w->provenance;

    // External literature facts (either polarity)
    std::optional<std::string> ext_reason;
    bool ext_exists = false;
    {
        bool e;
        std::string r;
        if (external_fact(n, p, gamma, mode, &e, &r)) {
            ext_exists = e;
            ext_reason = r;
            if (e && !exists_reason) exists_reason = r;
        }
    }

    // NotExists side
    std::optional<std::string> notexists_reason;
    if (auto cert = full_exclusion(n, p, gamma, mode, mode == Mode::almost ? 1 : 0))
        notexists_reason = cert->narrative();
    if (!notexists_reason) {
        for (const auto& f : kSearchFacts)
            if (f.n == n && f.p == p && f.gamma == gamma && f.mode == mode) {
                notexists_reason = "not exists by an exhaustive search";
                break;
            }
    }
    if (!notexists_reason && mode == Mode::almost && gamma == 0)
        if (auto cert = multiplier_fact_certificate(n, p)) notexists_reason = cert->narrative();
    if (!notexists_reason && ext_reason && !ext_exists) notexists_reason = ext_reason;

    if (exists_reason && notexists_reason)
        throw std::logic_error("status consistency violation at (" + std::to_string(n) + "," +
                               std::to_string(p) + "," + std::to_string(gamma) + "," + mode_name(mode) +
                               "): exists [" + *exists_reason + "] vs not-exists [" + *notexists_reason +
                               "]");

    if (exists_reason) {
        row.status = StatusKind::Exists;
        row.reason = *exists_reason;
    } else if (notexists_reason) {
        row.status = StatusKind::NotExists;
        row.reason = *notexists_reason;
    }
    return row;
}

std::vector<StatusRow> generate_table(int64_t gamma, Mode mode, uint32_t n_max) {
    std::vector<StatusRow> rows;
    for (uint32_t n = 2; n <= n_max; ++n)
        for (uint32_t p : candidate_primes(n, gamma, mode)) rows.push_back(status(n, p, gamma, mode));
    return rows;
}

std::string table_csv(const std::vector<StatusRow>& rows) {
    std::string out = "n,p,gamma,mode,status,reason\n";
    for (const auto& r : rows)
        out += std::to_string(r.n) + "," + std::to_string(r.p) + "," + std::to_string(r.gamma) + "," +
               mode_name(r.mode) + "," + status_name(r.status) + "," + r.reason + "\n";
    return out;
}

std::string table_markdown(const std::vector<StatusRow>& rows) {
    std::string out = "| n | p | status | comment |\n|---|---|--------|---------|\n";
    for (const auto& r : rows)
        out += "| " + std::to_string(r.n) + " | " + std::to_string(r.p) + " | " + status_name(r.status) +
               " | " + r.reason + " |\n";
    return out;
}

std::string table_json(const std::vector<StatusRow>& rows) {
    std::string out = "[";
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (i) out += ",";
        out += "{\"n\":" + std::to_string(r.n) + ",\"p\":" + std::to_string(r.p) +
               ",\"gamma\":" + std::to_string(r.gamma) + ",\"mode\":\"" + mode_name(r.mode) +
               "\",\"status\":\"" + status_name(r.status) + "\",\"reason\":\"" + r.reason + "\"}";
    }
    out += "]";
    return out;
}

std::vector<StatusRow> parse_table_csv(const std::string& text) {
    std::vector<StatusRow> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#' || line.rfind("n,p,", 0) == 0) continue;
        StatusRow r;
        size_t pos = 0;
        auto next = [&](bool last = false) {
            size_t c = last ? std::string::npos : line.find(',', pos);
            std::string f = line.substr(pos, c == std::string::npos ? c : c - pos);
            pos = c == std::string::npos ? line.size() : c + 1;
            return f;
        };
        r.n = uint32_t(std::stoul(next()));
        r.p = uint32_t(std::stoul(next()));
        r.gamma = std::stoll(next());
        r.mode = mode_from_name(next());
        r.status = status_from_name(next());
        r.reason = next(true);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<StatusRow> load_golden_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open golden file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_table_csv(buf.str());
}

size_t DiffReport::hard_count() const {
    size_t k = 0;
    for (const auto& e : entries) k += e.severity == DiffSeverity::Hard;
    return k;
}

std::string DiffReport::render() const {
    std::string out;
    for (const auto& e : entries)
        out += std::string(e.severity == DiffSeverity::Hard ? "HARD " : "info ") + e.cell + ": ours=[" +
               e.ours + "] golden=[" + e.golden + "]\n";
    out += std::to_string(hard_count()) + " disagreements\n";
    return out;
}

DiffReport diff_against_golden(const std::vector<StatusRow>& ours, const std::vector<StatusRow>& golden) {
    auto key = [](const StatusRow& r) {
        return std::to_string(r.n) + "," + std::to_string(r.p) + "," + std::to_string(r.gamma) + "," +
               mode_name(r.mode);
    };
    std::map<std::string, const StatusRow*> gmap, omap;
    for (const auto& r : golden) gmap[key(r)] = &r;
    for (const auto& r : ours) omap[key(r)] = &r;

    DiffReport rep;
    for (const auto& r : ours) {
        auto it = gmap.find(key(r));
        if (it == gmap.end()) {
            rep.entries.push_back({key(r), DiffSeverity::Hard, status_name(r.status), "<missing row>"});
            continue;
        }
        const StatusRow& g = *it->second;
        if (r.status != g.status)
            rep.entries.push_back({key(r), DiffSeverity::Hard, status_name(r.status) + ": " + r.reason,
                                   status_name(g.status) + ": " + g.reason});
        else if (r.reason != g.reason)
            rep.entries.push_back({key(r), DiffSeverity::Info, r.reason, g.reason});
    }
    for (const auto& g : golden)
        if (!omap.count(key(g)))
            rep.entries.push_back({key(g), DiffSeverity::Hard, "<missing row>", status_name(g.status)});
    return rep;
}

}  // namespace nps
