#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nps/cyclotomic.hpp"

using nps::CycInt;

namespace {

CycInt coeffs(uint32_t p, std::vector<nps::int128> c) { return CycInt::from_coeffs(p, std::move(c)); }

CycInt random_elem(uint32_t p, std::mt19937_64& rng) {
    std::uniform_int_distribution<int64_t> d(-9, 9);
    std::vector<nps::int128> c(p);
    for (auto& v : c) v = d(rng);
    return CycInt::from_coeffs(p, std::move(c));
}

}  // namespace

TEST_CASE("root construction reduces to canonical form") {
    CHECK(CycInt::from_exponent(3, 0).coeffs() == std::vector<nps::int128>{1, 0, 0});
    CHECK(CycInt::from_exponent(3, 2).coeffs() == std::vector<nps::int128>{-1, -1, 0});
    CHECK(CycInt::from_exponent(2, 1).coeffs() == std::vector<nps::int128>{-1, 0});
    CHECK_THROWS_AS(CycInt::from_exponent(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(CycInt(4), std::invalid_argument);
}

TEST_CASE("additive structure") {
    auto z = CycInt::from_exponent(3, 1);
    auto z2 = CycInt::from_exponent(3, 2);
    CHECK(z + z2 == CycInt::integer(3, -1));
    CHECK(z + CycInt(3) == z);
    CHECK(CycInt::from_exponent(5, 1) - CycInt::from_exponent(5, 1) == CycInt(5));
    CHECK_THROWS_AS(z + CycInt::from_exponent(5, 1), std::invalid_argument);
}

TEST_CASE("multiplication") {
    CHECK(CycInt::from_exponent(3, 1) * CycInt::from_exponent(3, 2) == CycInt::integer(3, 1));
    auto x = coeffs(5, {4, -1, 3, 0, 2});
    CHECK(x * CycInt::integer(5, 1) == x);
    // (1+z)(1+z^4) = 2 + z + z^4 in Z[zeta_5]
    auto lhs = coeffs(5, {1, 1, 0, 0, 0}) * coeffs(5, {1, 0, 0, 0, 1});
    CHECK(lhs == coeffs(5, {2, 1, 0, 0, 1}));
}

TEST_CASE("conjugation") {
    CHECK(CycInt::from_exponent(3, 1).conj() == CycInt::from_exponent(3, 2));
    CHECK(CycInt::integer(7, 42).conj() == CycInt::integer(7, 42));
    CHECK(coeffs(5, {1, 0, 1, 0, 0}).conj() == coeffs(5, {1, 0, 0, 1, 0}));
}

TEST_CASE("as_integer") {
    CHECK(coeffs(3, {2, 0, 0}).as_integer() == nps::int128(2));
    CHECK(!CycInt::from_exponent(3, 1).as_integer());
    CHECK((CycInt::from_exponent(3, 1) + CycInt::from_exponent(3, 2)).as_integer() == nps::int128(-1));
}

TEST_CASE("canonicalization is idempotent and last coordinate stays zero") {
    std::mt19937_64 rng(7);
    for (uint32_t p : {2u, 3u, 5u, 11u})
        for (int i = 0; i < 200; ++i) {
            auto x = random_elem(p, rng);
            CHECK(x.coeffs()[p - 1] == 0);
            CHECK(CycInt::from_coeffs(p, x.coeffs()) == x);
        }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(42);
    int checked = 0;
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        for (int i = 0; i < 2500; ++i) {
            auto a = random_elem(p, rng), b = random_elem(p, rng), c = random_elem(p, rng);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE(a + b == b + a);
            REQUIRE(a * b == b * a);
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a - b == a + (-b));
            ++checked;
        }
    }
    CHECK(checked == 10000);
}

TEST_CASE("conjugation is a ring automorphism and roots are unitary") {
    std::mt19937_64 rng(43);
    for (uint32_t p : {2u, 3u, 5u, 7u, 13u})
        for (int i = 0; i < 400; ++i) {
            auto a = random_elem(p, rng), b = random_elem(p, rng);
            REQUIRE((a * b).conj() == a.conj() * b.conj());
            REQUIRE((a + b).conj() == a.conj() + b.conj());
            REQUIRE(a.conj().conj() == a);
        }
    for (uint32_t p : {2u, 3u, 5u, 7u, 13u})
        for (uint32_t e = 0; e < p; ++e) {
            auto z = CycInt::from_exponent(p, e);
            REQUIRE(z * z.conj() == CycInt::integer(p, 1));
        }
}

TEST_CASE("text and json round-trips are exact") {
    std::mt19937_64 rng(44);
    for (uint32_t p : {2u, 3u, 5u, 11u})
        for (int i = 0; i < 200; ++i) {
            auto x = random_elem(p, rng);
            REQUIRE(CycInt::parse(x.render()) == x);
            REQUIRE(CycInt::from_json(x.to_json()) == x);
        }
    CHECK(coeffs(3, {-1, -1, 0}).render() == "-1 + -1*z + 0*z^2");
    CHECK(coeffs(3, {-1, -1, 0}).to_json() == "[-1,-1,0]");
}

TEST_CASE("overflow is detected, not wrapped") {
    nps::int128 big = nps::int128(1) << 126;
    auto x = coeffs(2, {big, 0});
    CHECK_THROWS_AS(x * x, std::overflow_error);
    CHECK_THROWS_AS(x + x + x, std::overflow_error);
}
