#include "nps/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nps {

Factorization factorize(uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize(0)");
    Factorization f;
    for (uint64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
        if (n % q) continue;
        uint32_t r = 0;
        while (n % q == 0) {
            n /= q;
            ++r;
        }
        f.push_back({q, r});
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2))
        if (n % q == 0) return false;
    return true;
}

bool is_prime_power(uint64_t n, uint64_t* base) {
    if (n < 2) return false;
    Factorization f = factorize(n);
    if (f.size() != 1) return false;
    if (base) *base = f[0].q;
    return true;
}

uint32_t exact_power(uint64_t q, uint64_t n) {
    if (n == 0) throw std::invalid_argument("exact_power on 0");
    uint32_t r = 0;
    while (n % q == 0) {
        n /= q;
        ++r;
    }
    return r;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return uint64_t((unsigned __int128)a * b % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    if (m == 1) return 0;
    uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

uint64_t mult_order(uint64_t q, uint64_t w) {
    if (w == 0) throw std::invalid_argument("mult_order: zero modulus");
    if (std::gcd(q, w) != 1) throw std::invalid_argument("mult_order: gcd(q, w) != 1");
    if (w == 1) return 1;
    uint64_t x = q % w;
    uint64_t ord = 1;
    while (x != 1) {
        x = mulmod(x, q % w, w);
        ++ord;
    }
    return ord;
}

bool is_self_conjugate(uint64_t q, uint64_t u) {
    if (u == 0) throw std::invalid_argument("is_self_conjugate: zero modulus");
    uint64_t w = u;
    while (w % q == 0) w /= q;
    if (w <= 2) return true;
    // q^j cycles through the subgroup generated by q mod w; -1 is hit iff the
    // order is even and q^(ord/2) == -1.
    uint64_t ord = mult_order(q, w);
    if (ord % 2) return false;
    return powmod(q % w, ord / 2, w) == w - 1;
}

std::vector<uint64_t> divisors(uint64_t n) {
    if (n == 0) throw std::invalid_argument("divisors(0)");
    std::vector<uint64_t> d;
    for (uint64_t i = 1; i * i <= n; ++i) {
        if (n % i) continue;
        d.push_back(i);
        if (i != n / i) d.push_back(n / i);
    }
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace nps
