#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nps/catalog.hpp"
#include "nps/exclusion.hpp"

using namespace nps;

TEST_CASE("divisibility gate") {
    CHECK(!check_divisibility(5, 3, 2, Mode::pary));
    auto c = check_divisibility(6, 5, 0, Mode::pary);
    REQUIRE(c);
    CHECK(c->rule == Rule::Divisibility);
    CHECK(reverify(*c));
    // almost rows are keyed by nonzero count: the period-13 witness is row n=12
    CHECK(check_divisibility(13, 3, 2, Mode::almost));
    CHECK(!check_divisibility(12, 3, 2, Mode::almost));
}

TEST_CASE("determinant rule") {
    auto c = check_determinant(5, -2, Mode::pary, 0);
    REQUIRE(c);
    CHECK(c->bound_lhs == -3);
    CHECK(reverify(*c));
    CHECK(!check_determinant(2, -2, Mode::pary, 0));  // the binary witness survives
    CHECK(!check_determinant(10, -1, Mode::pary, 0));
    CHECK(check_determinant(10, -2, Mode::almost, 1));
    CHECK(check_determinant(2, -2, Mode::almost, 1));  // no almost analogue of (-1,1)
}

TEST_CASE("p-ary battery reproduces cited cells") {
    SUBCASE("(5,2,-1) via clause (ii)") {
        auto c = exclude_pary(5, 2, -1);
        REQUIRE(c);
        CHECK(c->rule == Rule::T2ii);
        CHECK(c->q == 3);
        CHECK(c->u == 5);
        CHECK(c->narrative() == "not exists by Theorem 2 (ii) with q=3 and u=5");
    }
    SUBCASE("(45,23,-1) via clause (iii)") {
        auto c = exclude_pary(45, 23, -1);
        REQUIRE(c);
        CHECK(c->rule == Rule::T2iii);
        CHECK(c->q == 23);
        CHECK(c->u == 9);
        CHECK(c->bound_lhs == 23);
        CHECK(c->bound_rhs == 20);
    }
    SUBCASE("(13,3,1) is not excluded (a witness exists)") { CHECK(!exclude_pary(13, 3, 1)); }
    SUBCASE("the corrected u > 1 range keeps (23,3) and (41,3) open") {
        CHECK(!exclude_pary(23, 3, -1));
        CHECK(!exclude_pary(41, 3, -1));
    }
    SUBCASE("preconditions are errors, not silent answers") {
        CHECK_THROWS_AS(exclude_pary(5, 3, 8), std::invalid_argument);  // |gamma| >= n
        CHECK_THROWS_AS(exclude_pary(6, 5, 0), std::invalid_argument);  // gate failed
    }
}

TEST_CASE("almost battery reproduces cited cells") {
    SUBCASE("(77,7,-1) via clause (ii)") {
        auto c = exclude_almost(77, 7, -1, 1);
        REQUIRE(c);
        CHECK(c->rule == Rule::T4ii);
        CHECK(c->q == 3);
        CHECK(c->u == 2);
    }
    SUBCASE("(4,2,1) via clause (iii) resp.") {
        auto c = exclude_almost(4, 2, 1, 1);
        REQUIRE(c);
        CHECK(c->rule == Rule::T4iii_b);
        CHECK(c->q == 3);
        CHECK(c->u == 5);
        CHECK(c->narrative() == "not exists by Theorem 4 (iii) resp. with q=3 and u=5");
    }
    SUBCASE("(12,3,2) is not excluded (the period-13 witness)") { CHECK(!exclude_almost(12, 3, 2, 1)); }
    SUBCASE("(8,2,-1) exercises the q | u bound branch") {
        auto c = exclude_almost(8, 2, -1, 1);
        REQUIRE(c);
        CHECK(c->rule == Rule::T4ii);
        CHECK(c->q == 3);
        CHECK(c->u == 9);
        CHECK(c->bound_lhs == 3);
        CHECK(c->bound_rhs == 2);
    }
}

TEST_CASE("corollary rules for s >= 2 zero symbols") {
    // (gamma+1)n + (s-1)gamma = 11 for n=5, gamma=1, s=2; q=11 has odd power
    auto c = exclude_almost(5, 2, 1, 2);
    REQUIRE(c);
    CHECK(c->rule == Rule::Cor1_a);
    CHECK(c->q == 11);
    CHECK(c->u == 1);
    CHECK(reverify(*c));
    CHECK(!exclude_almost(5, 2, 0, 2));  // no corollary rule for gamma = 0
}

TEST_CASE("pipeline order: determinant, divisibility, battery") {
    auto det = full_exclusion(5, 3, -2, Mode::pary);
    REQUIRE(det);
    CHECK(det->rule == Rule::DeterminantNegative);
    auto div = full_exclusion(6, 5, 0, Mode::pary);
    REQUIRE(div);
    CHECK(div->rule == Rule::Divisibility);
    auto bat = full_exclusion(45, 23, -1, Mode::pary);
    REQUIRE(bat);
    CHECK(bat->rule == Rule::T2iii);
    CHECK(!full_exclusion(2, 2, -2, Mode::pary));  // the (-1,1) pair survives the pipeline
}

TEST_CASE("certificate json carries the re-checkable fields") {
    auto c = full_exclusion(45, 23, -1, Mode::pary);
    REQUIRE(c);
    auto j = c->to_json();
    CHECK(j.find("\"rule\":\"T2iii\"") != std::string::npos);
    CHECK(j.find("\"q\":23") != std::string::npos);
    CHECK(j.find("\"u\":9") != std::string::npos);
    CHECK(j.find("\"lhs\":23") != std::string::npos);
    CHECK(j.find("\"narrative\":\"not exists by Theorem 2 (iii) with q=23 and u=9\"") !=
          std::string::npos);
}

TEST_CASE("every certificate of the full sweep passes the independent re-verifier") {
    for (int64_t gamma = -2; gamma <= 2; ++gamma)
        for (Mode mode : {Mode::pary, Mode::almost})
            for (uint32_t n = 2; n <= 100; ++n)
                for (uint32_t p : candidate_primes(n, gamma, mode)) {
                    auto c = full_exclusion(n, p, gamma, mode, mode == Mode::almost ? 1 : 0);
                    if (!c) continue;
                    std::string why;
                    if (!reverify(*c, &why)) {
                        CAPTURE(n);
                        CAPTURE(p);
                        CAPTURE(gamma);
                        CAPTURE(why);
                        REQUIRE(false);
                    }
                }
}

TEST_CASE("re-verifier rejects doctored citations") {
    std::string why;
    CHECK(reverify_citation(5, 2, -1, Mode::pary, 0, Rule::T2ii, 3, 5, &why));
    // wrong u (not a divisor of n)
    CHECK(!reverify_citation(5, 2, -1, Mode::pary, 0, Rule::T2ii, 3, 4, &why));
    // (41,3,-1) clause (iii) with u=41 is admissible but not violated
    CHECK(!reverify_citation(41, 3, -1, Mode::pary, 0, Rule::T2iii, 3, 41, &why));
    CHECK(why == "conclusion not violated");
    // q not self-conjugate
    CHECK(!reverify_citation(23, 3, -1, Mode::pary, 0, Rule::T2ii, 2, 23, &why));
}
