#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nps/catalog.hpp"
#include "nps/exclusion.hpp"
#include "nps/search.hpp"

using namespace nps;

#ifndef NPS_GOLDEN_DIR
#error "NPS_GOLDEN_DIR must point at the golden CSV directory"
#endif

namespace {
const std::string kGolden = NPS_GOLDEN_DIR;
}

TEST_CASE("construction facts decide the cited cells") {
    CHECK(status(9, 3, 0, Mode::pary).status == StatusKind::Exists);    // n = p^2
    CHECK(status(26, 3, -1, Mode::pary).status == StatusKind::Exists);  // 27 = 3^3
    CHECK(status(4, 3, 0, Mode::almost).status == StatusKind::Exists);  // 4 a prime power, 3 | 3
}

TEST_CASE("status pipeline examples") {
    auto mult = status(91, 3, 0, Mode::almost);
    CHECK(mult.status == StatusKind::NotExists);
    CHECK(mult.reason.find("multiplier") != std::string::npos);
    CHECK(status(19, 5, -1, Mode::pary).status == StatusKind::Open);
    CHECK(status(13, 3, 1, Mode::pary).status == StatusKind::Exists);
    CHECK(status(45, 23, -1, Mode::pary).status == StatusKind::NotExists);
    CHECK(status(77, 19, 0, Mode::almost).status == StatusKind::Open);
}

TEST_CASE("candidate primes follow the table conventions") {
    CHECK(candidate_primes(5, -1, Mode::pary) == std::vector<uint32_t>{2, 3});
    CHECK(candidate_primes(9, 0, Mode::pary) == std::vector<uint32_t>{3});      // odd p only
    CHECK(candidate_primes(8, -1, Mode::almost) == std::vector<uint32_t>{2});   // p | n
    CHECK(candidate_primes(5, 1, Mode::pary).empty());                          // 3 does not divide 4
    CHECK(candidate_primes(3, 2, Mode::pary).empty());                          // n - gamma = 1
}

TEST_CASE("soundness: no construction fact or witness cell is ever excluded") {
    for (int64_t gamma = -2; gamma <= 2; ++gamma)
        for (Mode mode : {Mode::pary, Mode::almost})
            for (uint32_t n = 2; n <= 100; ++n)
                for (uint32_t p : candidate_primes(n, gamma, mode)) {
                    // status() throws on any Exists/NotExists collision
                    CAPTURE(n);
                    CAPTURE(p);
                    CAPTURE(gamma);
                    REQUIRE_NOTHROW(status(n, p, gamma, mode));
                }
}

TEST_CASE("zero status disagreements against the transcribed golden tables") {
    struct Job {
        int64_t gamma;
        Mode mode;
        const char* file;
    };
    for (auto& j : std::vector<Job>{{-1, Mode::pary, "pary_gamma_-1.csv"},
                                    {-1, Mode::almost, "almost_gamma_-1.csv"},
                                    {1, Mode::almost, "almost_gamma_1.csv"},
                                    {2, Mode::almost, "almost_gamma_2.csv"}}) {
        auto rows = generate_table(j.gamma, j.mode);
        auto golden = load_golden_csv(kGolden + "/" + j.file);
        auto rep = diff_against_golden(rows, golden);
        CAPTURE(j.file);
        CHECK(rep.hard_count() == 0);
    }
}

TEST_CASE("zero status disagreements against the remaining golden tables") {
    struct Job {
        int64_t gamma;
        Mode mode;
        const char* file;
    };
    for (auto& j : std::vector<Job>{{0, Mode::pary, "pary_gamma_0.csv"},
                                    {1, Mode::pary, "pary_gamma_1.csv"},
                                    {2, Mode::pary, "pary_gamma_2.csv"},
                                    {0, Mode::almost, "almost_gamma_0.csv"}}) {
        auto rows = generate_table(j.gamma, j.mode);
        auto golden = load_golden_csv(kGolden + "/" + j.file);
        auto rep = diff_against_golden(rows, golden);
        CAPTURE(j.file);
        CHECK(rep.hard_count() == 0);
    }
}

TEST_CASE("headline cells") {
    CHECK(status(45, 23, -1, Mode::pary).status == StatusKind::NotExists);
    CHECK(status(77, 7, -1, Mode::almost).status == StatusKind::NotExists);
    CHECK(status(23, 3, -1, Mode::pary).status == StatusKind::Open);
    CHECK(status(41, 3, -1, Mode::pary).status == StatusKind::Open);
    for (auto [n, p] : {std::pair<uint32_t, uint32_t>{63, 31}, {91, 3}, {92, 7}, {93, 23}})
        CHECK(status(n, p, 0, Mode::almost).status == StatusKind::NotExists);
}

TEST_CASE("empty range yields an empty table") { CHECK(generate_table(-1, Mode::pary, 1).empty()); }

TEST_CASE("catalog verdicts agree with brute-force search on every small cell") {
    // every table cell whose canonical space fits in 2 * 10^5 candidates is
    // re-decided from scratch; Exists rows must produce a witness (validating
    // the construction facts empirically), NotExists rows must exhaust
    for (int64_t gamma = -1; gamma <= 2; ++gamma)
        for (Mode mode : {Mode::pary, Mode::almost})
            for (uint32_t n = 2; n <= 14; ++n)
                for (uint32_t p : candidate_primes(n, gamma, mode)) {
                    if (std::pow(double(p), double(n - 1)) > 2e5) continue;
                    auto row = status(n, p, gamma, mode);
                    SearchSpec spec;
                    spec.n = n;
                    spec.p = p;
                    spec.gamma = gamma;
                    spec.s = mode == Mode::almost ? 1 : 0;
                    auto res = search(spec);
                    CAPTURE(n);
                    CAPTURE(p);
                    CAPTURE(gamma);
                    CAPTURE(int(mode));
                    REQUIRE(res.outcome != SearchResult::Outcome::Aborted);
                    bool found = res.outcome == SearchResult::Outcome::Witness;
                    if (row.status == StatusKind::Exists) REQUIRE(found);
                    if (row.status == StatusKind::NotExists) REQUIRE(!found);
                    if (row.status == StatusKind::Open) REQUIRE(!found);  // else the cell is decidable
                }
}

TEST_CASE("csv and diff plumbing") {
    auto rows = generate_table(-1, Mode::pary, 10);
    auto text = table_csv(rows);
    auto parsed = parse_table_csv(text);
    REQUIRE(parsed.size() == rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(parsed[i].n == rows[i].n);
        CHECK(parsed[i].status == rows[i].status);
        CHECK(parsed[i].reason == rows[i].reason);
    }
    auto rep = diff_against_golden(rows, parsed);
    CHECK(rep.entries.empty());
    // a doctored status must be a hard diff; a doctored reason informational
    auto doctored = parsed;
    doctored[0].status = doctored[0].status == StatusKind::Open ? StatusKind::Exists : StatusKind::Open;
    doctored[1].reason += " (doctored)";
    rep = diff_against_golden(rows, doctored);
    CHECK(rep.hard_count() == 1);
    CHECK(rep.entries.size() == 2);
    // a missing golden row is hard
    doctored.pop_back();
    CHECK(diff_against_golden(rows, doctored).hard_count() >= 2);
    // markdown and json emitters stay in sync with the row count
    CHECK(table_markdown(rows).find("| 5 | 2 | NotExists |") != std::string::npos);
    CHECK(table_json(rows).find("\"n\":5") != std::string::npos);
}
