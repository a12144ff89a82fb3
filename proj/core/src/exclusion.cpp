#include "nps/exclusion.hpp"

#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

#include "nps/numtheory.hpp"

namespace nps {

std::string mode_name(Mode m) { return m == Mode::pary ? "pary" : "almost"; }

Mode mode_from_name(std::string_view s) {
    if (s == "pary") return Mode::pary;
    if (s == "almost") return Mode::almost;
    throw std::invalid_argument("unknown mode: " + std::string(s));
}

std::string rule_name(Rule r) {
    switch (r) {
        case Rule::Divisibility: return "Divisibility";
        case Rule::DeterminantNegative: return "DeterminantNegative";
        case Rule::T2i: return "T2i";
        case Rule::T2ii: return "T2ii";
        case Rule::T2iii: return "T2iii";
        case Rule::T2iv: return "T2iv";
        case Rule::T4i: return "T4i";
        case Rule::T4ii: return "T4ii";
        case Rule::T4iii_a: return "T4iii_a";
        case Rule::T4iii_b: return "T4iii_b";
        case Rule::Cor1_a: return "Cor1_a";
        case Rule::Cor1_b: return "Cor1_b";
        case Rule::MultiplierInfeasible: return "MultiplierInfeasible";
    }
    return "?";
}

namespace {

int64_t ipow(uint64_t base, uint32_t e) {
    unsigned __int128 v = 1;
    for (uint32_t i = 0; i < e; ++i) {
        v *= base;
        if (v > (unsigned __int128)INT64_MAX) throw std::overflow_error("ipow overflow");
    }
    return int64_t(v);
}

// memoized self-conjugacy for the sweep loops
bool sc(uint64_t q, uint64_t u) {
    thread_local std::unordered_map<uint64_t, bool> memo;
    uint64_t key = (q << 32) | u;
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool v = is_self_conjugate(q, u);
    memo.emplace(key, v);
    return v;
}

std::vector<uint64_t> prime_divisors(uint64_t v) {
    std::vector<uint64_t> qs;
    for (auto& pp : factorize(v)) qs.push_back(pp.q);
    return qs;
}

Certificate base_cert(Rule rule, uint32_t n, uint32_t p, int64_t gamma, Mode mode, uint32_t s) {
    Certificate c;
    c.rule = rule;
    c.n = n;
    c.p = p;
    c.gamma = gamma;
    c.mode = mode;
    c.s = s;
    return c;
}

}  // namespace

std::optional<Certificate> check_divisibility(uint32_t n, uint32_t p, int64_t gamma, Mode mode) {
    int64_t d = mode == Mode::pary ? int64_t(n) - gamma : int64_t(n) - gamma - 1;
    if (((d % p) + p) % p == 0) return std::nullopt;
    Certificate c = base_cert(Rule::Divisibility, n, p, gamma, mode, mode == Mode::pary ? 0 : 1);
    c.bound_lhs = d;
    c.bound_rhs = p;
    return c;
}

std::optional<Certificate> check_determinant(uint32_t n, int64_t gamma, Mode mode, uint32_t s) {
    if (gamma > -2 || n < 2) return std::nullopt;
    // Gram determinant of the circulant is F * (n - gamma)^(N-1) with
    // N the full period; only the sign of F matters since n - gamma > 0.
    int64_t f = mode == Mode::pary ? (gamma + 1) * int64_t(n) - gamma
                                   : (gamma + 1) * int64_t(n) + (int64_t(s) - 1) * gamma;
    if (f >= 0) return std::nullopt;  // covers the binary (n=2, gamma=-2) witness
    Certificate c = base_cert(Rule::DeterminantNegative, n, 0, gamma, mode, mode == Mode::pary ? 0 : s);
    c.bound_lhs = f;
    c.bound_rhs = 0;
    return c;
}

std::optional<Certificate> exclude_pary(uint32_t n, uint32_t p, int64_t gamma) {
    if (!is_prime(p)) throw std::invalid_argument("exclude_pary: p must be prime");
    if (std::abs(gamma) >= int64_t(n)) throw std::invalid_argument("exclude_pary: requires |gamma| < n");
    if ((int64_t(n) - gamma) % p != 0) throw std::invalid_argument("exclude_pary: divisibility gate failed");

    auto us = divisors(n);

    if (gamma == 0) {
        // (i): q != p, q^r || n, q self-conjugate mod u*p, u >= 1 divides n
        //      => r even and q^(r/2) <= n/u
        for (uint64_t q : prime_divisors(n)) {
            if (q == p) continue;
            uint32_t r = exact_power(q, n);
            for (uint64_t u : us) {
                if (!sc(q, u * p)) continue;
                Certificate c = base_cert(Rule::T2i, n, p, gamma, Mode::pary, 0);
                c.q = q;
                c.u = u;
                c.r = r;
                if (r % 2) return c;
                int64_t lhs = ipow(q, r / 2), rhs = int64_t(n / u);
                if (lhs > rhs) {
                    c.bound_lhs = lhs;
                    c.bound_rhs = rhs;
                    return c;
                }
            }
        }
        return std::nullopt;
    }

    // (ii): q != p, q^r || n - gamma, q self-conjugate mod u*p, u > 1 divides n.
    //       q not dividing u => r even and q^(r/2) <= n/u;
    //       q dividing u     => q^floor(r/2) <= 2n/u.
    int64_t base2 = int64_t(n) - gamma;  // > 0 since gamma < n
    for (uint64_t q : prime_divisors(uint64_t(base2))) {
        if (q == p) continue;
        uint32_t r = exact_power(q, uint64_t(base2));
        for (uint64_t u : us) {
            if (u == 1) continue;
            if (!sc(q, u * p)) continue;
            Certificate c = base_cert(Rule::T2ii, n, p, gamma, Mode::pary, 0);
            c.q = q;
            c.u = u;
            c.r = r;
            if (u % q != 0) {
                if (r % 2) return c;
                int64_t lhs = ipow(q, r / 2), rhs = int64_t(n / u);
                if (lhs > rhs) {
                    c.bound_lhs = lhs;
                    c.bound_rhs = rhs;
                    return c;
                }
            } else {
                int64_t lhs = ipow(q, r / 2), rhs = 2 * int64_t(n / u);
                if (lhs > rhs) {
                    c.bound_lhs = lhs;
                    c.bound_rhs = rhs;
                    return c;
                }
            }
        }
    }

    // (iii): q = p, p^r || n - gamma, p self-conjugate mod u (not u*p),
    //        u > 1 divides n, p not dividing u.
    //        r even => p^(r/2) <= 2n/u;  r odd => p^((r+1)/2) <= 4n/u.
    {
        uint32_t r = exact_power(p, uint64_t(base2));
        if (r >= 1) {
            for (uint64_t u : us) {
                if (u == 1 || u % p == 0) continue;
                if (!sc(p, u)) continue;
                Certificate c = base_cert(Rule::T2iii, n, p, gamma, Mode::pary, 0);
                c.q = p;
                c.u = u;
                c.r = r;
                int64_t lhs = r % 2 == 0 ? ipow(p, r / 2) : ipow(p, (r + 1) / 2);
                int64_t rhs = r % 2 == 0 ? 2 * int64_t(n / u) : 4 * int64_t(n / u);
                if (lhs > rhs) {
                    c.bound_lhs = lhs;
                    c.bound_rhs = rhs;
                    return c;
                }
            }
        }
    }

    // (iv): q != p, q^r || (gamma+1)n - gamma, q self-conjugate mod u*p,
    //       u >= 1 divides n, q not dividing u => r even.
    int64_t base4 = (gamma + 1) * int64_t(n) - gamma;
    uint64_t abs4 = uint64_t(std::abs(base4));
    if (abs4 >= 2) {
        for (uint64_t q : prime_divisors(abs4)) {
            if (q == p) continue;
            uint32_t r = exact_power(q, abs4);
            if (r % 2 == 0) continue;
            for (uint64_t u : us) {
                if (u % q == 0) continue;
                if (!sc(q, u * p)) continue;
                Certificate c = base_cert(Rule::T2iv, n, p, gamma, Mode::pary, 0);
                c.q = q;
                c.u = u;
                c.r = r;
                return c;
            }
        }
    }

    return std::nullopt;
}

std::optional<Certificate> exclude_almost(uint32_t n, uint32_t p, int64_t gamma, uint32_t s) {
    if (!is_prime(p)) throw std::invalid_argument("exclude_almost: p must be prime");
    if (s < 1) throw std::invalid_argument("exclude_almost: requires s >= 1");
    if (std::abs(gamma) >= int64_t(n)) throw std::invalid_argument("exclude_almost: requires |gamma| < n");

    if (s >= 2) {
        // Only the corollary rules are available; u runs over divisors of n+s.
        if (gamma == 0) return std::nullopt;
        auto us = divisors(n + s);
        int64_t base_a = (gamma + 1) * int64_t(n) + (int64_t(s) - 1) * gamma;
        uint64_t abs_a = uint64_t(std::abs(base_a));
        if (abs_a >= 2) {
            for (uint64_t q : prime_divisors(abs_a)) {
                if (q == p) continue;
                uint32_t r = exact_power(q, abs_a);
                if (r % 2 == 0) continue;
                for (uint64_t u : us) {
                    if (u % q == 0) continue;
                    if (!sc(q, u * p)) continue;
                    Certificate c = base_cert(Rule::Cor1_a, n, p, gamma, Mode::almost, s);
                    c.q = q;
                    c.u = u;
                    c.r = r;
                    return c;
                }
            }
        }
        int64_t base_b = int64_t(n) - gamma;
        for (uint64_t q : prime_divisors(uint64_t(base_b))) {
            if (q == p) continue;
            uint32_t r = exact_power(q, uint64_t(base_b));
            if (r % 2 == 0) continue;
            for (uint64_t u : us) {
                if (u == 1 || u % q == 0) continue;
                if (!sc(q, u * p)) continue;
                Certificate c = base_cert(Rule::Cor1_b, n, p, gamma, Mode::almost, s);
                c.q = q;
                c.u = u;
                c.r = r;
                return c;
            }
        }
        return std::nullopt;
    }

    if ((int64_t(n) - gamma - 1) % p != 0)
        throw std::invalid_argument("exclude_almost: divisibility gate failed");

    auto us = divisors(n + 1);

    if (gamma == 0) {
        // (i): q != p, q^r || n, self-conjugate mod u*p, u >= 1 divides n+1
        //      => r even and q^(r/2) <= (n+1)/u
        for (uint64_t q : prime_divisors(n)) {
            if (q == p) continue;
            uint32_t r = exact_power(q, n);
            for (uint64_t u : us) {
                if (!sc(q, u * p)) continue;
                Certificate c = base_cert(Rule::T4i, n, p, gamma, Mode::almost, 1);
                c.q = q;
                c.u = u;
                c.r = r;
                if (r % 2) return c;
                int64_t lhs = ipow(q, r / 2), rhs = int64_t((n + 1) / u);
                if (lhs > rhs) {
                    c.bound_lhs = lhs;
                    c.bound_rhs = rhs;
                    return c;
                }
            }
        }
        return std::nullopt;
    }

    if (gamma == -1) {
        // (ii): q != p, q^r || n + 1, self-conjugate mod u*p, u > 1 divides n+1.
        //       q not dividing u => r even and q^(r/2) <= (n+1)/u;
        //       q dividing u     => q^floor(r/2) <= 2(n+1)/u.
        for (uint64_t q : prime_divisors(n + 1)) {
            if (q == p) continue;
            uint32_t r = exact_power(q, n + 1);
            for (uint64_t u : us) {
                if (u == 1) continue;
                if (!sc(q, u * p)) continue;
                Certificate c = base_cert(Rule::T4ii, n, p, gamma, Mode::almost, 1);
                c.q = q;
                c.u = u;
                c.r = r;
                if (u % q != 0) {
                    if (r % 2) return c;
                    int64_t lhs = ipow(q, r / 2), rhs = int64_t((n + 1) / u);
                    if (lhs > rhs) {
                        c.bound_lhs = lhs;
                        c.bound_rhs = rhs;
                        return c;
                    }
                } else {
                    int64_t lhs = ipow(q, r / 2), rhs = 2 * int64_t((n + 1) / u);
                    if (lhs > rhs) {
                        c.bound_lhs = lhs;
                        c.bound_rhs = rhs;
                        return c;
                    }
                }
            }
        }
    }

    // (iii): two quantities, both with conclusion "r is even" under q not
    // dividing u. Branch a factors (gamma+1)n with u >= 1; branch b ("resp.")
    // factors n - gamma with u > 1.
    int64_t base_a = (gamma + 1) * int64_t(n);
    uint64_t abs_a = uint64_t(std::abs(base_a));
    if (abs_a >= 2) {
        for (uint64_t q : prime_divisors(abs_a)) {
            if (q == p) continue;
            uint32_t r = exact_power(q, abs_a);
            if (r % 2 == 0) continue;
            for (uint64_t u : us) {
                if (u % q == 0) continue;
                if (!sc(q, u * p)) continue;
                Certificate c = base_cert(Rule::T4iii_a, n, p, gamma, Mode::almost, 1);
                c.q = q;
                c.u = u;
                c.r = r;
                return c;
            }
        }
    }
    int64_t base_b = int64_t(n) - gamma;
    for (uint64_t q : prime_divisors(uint64_t(base_b))) {
        if (q == p) continue;
        uint32_t r = exact_power(q, uint64_t(base_b));
        if (r % 2 == 0) continue;
        for (uint64_t u : us) {
            if (u == 1 || u % q == 0) continue;
            if (!sc(q, u * p)) continue;
            Certificate c = base_cert(Rule::T4iii_b, n, p, gamma, Mode::almost, 1);
            c.q = q;
            c.u = u;
            c.r = r;
            return c;
        }
    }

    return std::nullopt;
}

std::optional<Certificate> full_exclusion(uint32_t n, uint32_t p, int64_t gamma, Mode mode, uint32_t s) {
    if (!is_prime(p)) throw std::invalid_argument("full_exclusion: p must be prime");
    if (mode == Mode::pary) s = 0;
    if (auto c = check_determinant(n, gamma, mode, s)) return c;
    if (mode == Mode::pary || s == 1) {
        if (auto c = check_divisibility(n, p, gamma, mode)) return c;
    }
    if (std::abs(gamma) >= int64_t(n)) return std::nullopt;  // clause battery needs |gamma| < n
    if (mode == Mode::pary) return exclude_pary(n, p, gamma);
    return exclude_almost(n, p, gamma, s);
}

std::string Certificate::narrative() const {
    auto with_qu = [&](const std::string& head, bool resp = false) {
        return "not exists by " + head + (resp ? " resp." : "") + " with q=" + std::to_string(q) +
               " and u=" + std::to_string(u);
    };
    switch (rule) {
        case Rule::T2i: return with_qu("Theorem 2 (i)");
        case Rule::T2ii: return with_qu("Theorem 2 (ii)");
        case Rule::T2iii: return with_qu("Theorem 2 (iii)");
        case Rule::T2iv: return with_qu("Theorem 2 (iv)");
        case Rule::T4i: return with_qu("Theorem 4 (i)");
        case Rule::T4ii: return with_qu("Theorem 4 (ii)");
        case Rule::T4iii_a: return with_qu("Theorem 4 (iii)");
        case Rule::T4iii_b: return with_qu("Theorem 4 (iii)", true);
        case Rule::Cor1_a: return with_qu("Corollary 1");
        case Rule::Cor1_b: return with_qu("Corollary 1", true);
        case Rule::Divisibility: {
            std::string what = mode == Mode::pary ? "n-gamma" : "n-gamma-1";
            return "not exists since p=" + std::to_string(p) + " does not divide " + what + "=" +
                   std::to_string(*bound_lhs);
        }
        case Rule::DeterminantNegative:
            return "not exists by the determinant criterion (gamma <= -2)";
        case Rule::MultiplierInfeasible:
            return "not exists by the multiplier orbit argument with t=" + std::to_string(aux);
    }
    return "?";
}

std::string Certificate::to_json() const {
    std::string out = "{\"rule\":\"" + rule_name(rule) + "\"";
    out += ",\"n\":" + std::to_string(n);
    out += ",\"p\":" + std::to_string(p);
    out += ",\"gamma\":" + std::to_string(gamma);
    out += ",\"mode\":\"" + mode_name(mode) + "\"";
    out += ",\"s\":" + std::to_string(s);
    if (q) out += ",\"q\":" + std::to_string(q);
    if (u) out += ",\"u\":" + std::to_string(u);
    out += ",\"r\":" + std::to_string(r);
    if (bound_lhs) out += ",\"lhs\":" + std::to_string(*bound_lhs);
    if (bound_rhs) out += ",\"rhs\":" + std::to_string(*bound_rhs);
    if (rule == Rule::MultiplierInfeasible) out += ",\"t\":" + std::to_string(aux);
    if (!note.empty()) out += ",\"note\":\"" + note + "\"";
    out += ",\"narrative\":\"" + narrative() + "\"}";
    return out;
}

// ---------------------------------------------------------------------------
// Independent re-verifier. Everything below recomputes its number theory from
// first principles (trial division, iterated modular powers) so that a bug in
// the scanning code above cannot silently confirm itself.
// ---------------------------------------------------------------------------

namespace {

bool slow_prime(uint64_t v) {
    if (v < 2) return false;
    for (uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

uint32_t slow_exact_power(uint64_t q, uint64_t v) {
    uint32_t r = 0;
    while (v % q == 0) {
        v /= q;
        ++r;
    }
    return r;
}

// brute scan j = 0 .. w-1 of q^j mod w looking for -1
bool slow_self_conjugate(uint64_t q, uint64_t modulus) {
    uint64_t w = modulus;
    while (w % q == 0) w /= q;
    if (w <= 2) return true;
    uint64_t x = 1 % w;
    for (uint64_t j = 0; j < w; ++j) {
        if (x == w - 1) return true;
        x = x * (q % w) % w;
    }
    return false;
}

int64_t slow_pow(uint64_t b, uint32_t e) {
    int64_t v = 1;
    for (uint32_t i = 0; i < e; ++i) v *= int64_t(b);
    return v;
}

bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

}  // namespace

bool reverify_citation(uint32_t n, uint32_t p, int64_t gamma, Mode mode, uint32_t s, Rule clause,
                       uint64_t q, uint64_t u, std::string* why) {
    if (!slow_prime(p)) return fail(why, "p not prime");
    if (std::abs(gamma) >= int64_t(n)) return fail(why, "|gamma| >= n");
    if (q == 0 || u == 0) return fail(why, "missing q or u");
    if (!slow_prime(q)) return fail(why, "q not prime");

    bool almost = mode == Mode::almost;
    if (almost && s == 0) return fail(why, "almost citation needs s >= 1");
    if (!almost && s != 0) return fail(why, "p-ary citation with s != 0");

    uint64_t u_range = almost ? uint64_t(n) + s : uint64_t(n);

    auto check = [&](bool cond, const char* msg) { return cond ? true : fail(why, msg); };

    switch (clause) {
        case Rule::T2i: {
            if (!check(!almost && gamma == 0, "T2i needs p-ary gamma=0")) return false;
            if (!check(q != p && n % q == 0, "q inadmissible")) return false;
            if (!check(n % u == 0, "u does not divide n")) return false;
            if (!check(slow_self_conjugate(q, u * p), "q not self-conjugate mod u*p")) return false;
            uint32_t r = slow_exact_power(q, n);
            if (r % 2) return true;
            return check(slow_pow(q, r / 2) > int64_t(n / u), "conclusion not violated");
        }
        case Rule::T2ii: {
            if (!check(!almost && gamma != 0, "T2ii needs p-ary gamma!=0")) return false;
            uint64_t base = uint64_t(int64_t(n) - gamma);
            if (!check(q != p && base % q == 0, "q inadmissible")) return false;
            if (!check(u > 1 && n % u == 0, "u inadmissible")) return false;
            if (!check(slow_self_conjugate(q, u * p), "q not self-conjugate mod u*p")) return false;
            uint32_t r = slow_exact_power(q, base);
            if (u % q != 0) {
                if (r % 2) return true;
                return check(slow_pow(q, r / 2) > int64_t(n / u), "conclusion not violated");
            }
            return check(slow_pow(q, r / 2) > 2 * int64_t(n / u), "conclusion not violated");
        }
        case Rule::T2iii: {
            if (!check(!almost && gamma != 0, "T2iii needs p-ary gamma!=0")) return false;
            if (!check(q == p, "T2iii requires q = p")) return false;
            uint64_t base = uint64_t(int64_t(n) - gamma);
            uint32_t r = slow_exact_power(p, base);
            if (!check(r >= 1, "p does not divide n-gamma")) return false;
            if (!check(u > 1 && n % u == 0 && u % p != 0, "u inadmissible")) return false;
            if (!check(slow_self_conjugate(p, u), "p not self-conjugate mod u")) return false;
            int64_t lhs = r % 2 == 0 ? slow_pow(p, r / 2) : slow_pow(p, (r + 1) / 2);
            int64_t rhs = r % 2 == 0 ? 2 * int64_t(n / u) : 4 * int64_t(n / u);
            return check(lhs > rhs, "conclusion not violated");
        }
        case Rule::T2iv: {
            if (!check(!almost && gamma != 0, "T2iv needs p-ary gamma!=0")) return false;
            int64_t base = (gamma + 1) * int64_t(n) - gamma;
            uint64_t abs_base = uint64_t(std::abs(base));
            if (!check(abs_base >= 2 && q != p && abs_base % q == 0, "q inadmissible")) return false;
            if (!check(n % u == 0 && u % q != 0, "u inadmissible")) return false;
            if (!check(slow_self_conjugate(q, u * p), "q not self-conjugate mod u*p")) return false;
            return check(slow_exact_power(q, abs_base) % 2 == 1, "conclusion not violated");
        }
        case Rule::T4i: {
            if (!check(almost && s == 1 && gamma == 0, "T4i needs almost s=1 gamma=0")) return false;
            if (!check(q != p && n % q == 0, "q inadmissible")) return false;
            if (!check(u_range % u == 0, "u does not divide n+1")) return false;
            if (!check(slow_self_conjugate(q, u * p), "q not self-conjugate mod u*p")) return false;
            uint32_t r = slow_exact_power(q, n);
            if (r % 2) return true;
            return check(slow_pow(q, r / 2) > int64_t(u_range / u), "conclusion not violated");
        }
        case Rule::T4ii: {
            if (!check(almost && s == 1 && gamma == -1, "T4ii needs almost s=1 gamma=-1")) return false;
            uint64_t base = uint64_t(n) + 1;
            if (!check(q != p && base % q == 0, "q inadmissible")) return false;
            if (!check(u > 1 && u_range % u == 0, "u inadmissible")) return false;
            if (!check(slow_self_conjugate(q, u * p), "q not self-conjugate mod u*p")) return false;
            uint32_t r = slow_exact_power(q, base);
            if (u % q != 0) {
                if (r % 2) return true;
                return check(slow_pow(q, r / 2) > int64_t(u_range / u), "conclusion not violated");
            }
            return check(slow_pow(q, r / 2) > 2 * int64_t(u_range / u), "conclusion not violated");
        }
        case Rule::T4iii_a:
        case Rule::Cor1_a: {
            if (!check(almost && gamma != 0, "clause needs almost gamma!=0")) return false;
            if (clause == Rule::T4iii_a && !check(s == 1, "T4iii needs s=1")) return false;
            int64_t base = (gamma + 1) * int64_t(n) + (int64_t(s) - 1) * gamma;
            uint64_t abs_base = uint64_t(std::abs(base));
            if (!check(abs_base >= 2 && q != p && abs_base % q == 0, "q inadmissible")) return false;
            if (!check(u_range % u == 0 && u % q != 0, "u inadmissible")) return false;
            if (!check(slow_self_conjugate(q, u * p), "q not self-conjugate mod u*p")) return false;
            return check(slow_exact_power(q, abs_base) % 2 == 1, "conclusion not violated");
        }
        case Rule::T4iii_b:
        case Rule::Cor1_b: {
            if (!check(almost && gamma != 0, "clause needs almost gamma!=0")) return false;
            if (clause == Rule::T4iii_b && !check(s == 1, "T4iii needs s=1")) return false;
            uint64_t base = uint64_t(int64_t(n) - gamma);
            if (!check(q != p && base % q == 0, "q inadmissible")) return false;
            if (!check(u > 1 && u_range % u == 0 && u % q != 0, "u inadmissible")) return false;
            if (!check(slow_self_conjugate(q, u * p), "q not self-conjugate mod u*p")) return false;
            return check(slow_exact_power(q, base) % 2 == 1, "conclusion not violated");
        }
        default:
            return fail(why, "rule is not a clause citation");
    }
}

bool reverify(const Certificate& cert, std::string* why) {
    switch (cert.rule) {
        case Rule::Divisibility: {
            int64_t d = cert.mode == Mode::pary ? int64_t(cert.n) - cert.gamma
                                                : int64_t(cert.n) - cert.gamma - 1;
            if (((d % cert.p) + cert.p) % cert.p != 0) return true;
            return fail(why, "divisibility actually holds");
        }
        case Rule::DeterminantNegative: {
            if (cert.gamma > -2) return fail(why, "gamma > -2");
            int64_t f = cert.mode == Mode::pary
                            ? (cert.gamma + 1) * int64_t(cert.n) - cert.gamma
                            : (cert.gamma + 1) * int64_t(cert.n) + (int64_t(cert.s) - 1) * cert.gamma;
            if (f < 0) return true;
            return fail(why, "determinant not negative");
        }
        case Rule::MultiplierInfeasible:
            return fail(why, "multiplier certificates are re-verified by the multiplier engine");
        default:
            return reverify_citation(cert.n, cert.p, cert.gamma, cert.mode, cert.s, cert.rule,
                                     cert.q, cert.u, why);
    }
}

}  // namespace nps
