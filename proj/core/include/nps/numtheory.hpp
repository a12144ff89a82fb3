#pragma once

#include <cstdint>
#include <vector>

namespace nps {

struct PrimePower {
    uint64_t q;   // prime
    uint32_t r;   // exponent >= 1
    bool operator==(const PrimePower&) const = default;
};

/// Complete prime factorization, primes strictly increasing.
/// Trial division; intended range n <= ~10^12.
using Factorization = std::vector<PrimePower>;

Factorization factorize(uint64_t n);  // n >= 1; factorize(1) = {}

bool is_prime(uint64_t n);
/// True iff n = q^k for a prime q, k >= 1. Writes q to *base when given.
bool is_prime_power(uint64_t n, uint64_t* base = nullptr);

/// Largest r with q^r | n (q prime, n >= 1).
uint32_t exact_power(uint64_t q, uint64_t n);

/// Least j >= 1 with q^j == 1 (mod w); requires gcd(q, w) = 1. Order 1 when w = 1.
uint64_t mult_order(uint64_t q, uint64_t w);

/// Self-conjugacy of the prime q modulo u: strip the q-part of u to get w,
/// then test whether q^j == -1 (mod w) for some j >= 0. Holds trivially for
/// w <= 2 (-1 == 1 there).
bool is_self_conjugate(uint64_t q, uint64_t u);

/// All positive divisors, ascending.
std::vector<uint64_t> divisors(uint64_t n);

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod(uint64_t a, uint64_t e, uint64_t m);

}  // namespace nps
