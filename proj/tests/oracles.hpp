#pragma once

// Brute-force oracles, deliberately independent of the library code paths
// they check. Everything here favors obviousness over speed.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "nps/groupring.hpp"
#include "nps/sequence.hpp"

namespace oracle {

// difference multiset by literal pair enumeration
inline std::map<std::pair<uint32_t, uint32_t>, int64_t> difference_counts(
    const std::vector<nps::GroupElem>& R, uint32_t m, uint32_t p) {
    std::map<std::pair<uint32_t, uint32_t>, int64_t> counts;
    for (auto& r1 : R)
        for (auto& r2 : R) {
            if (r1.h == r2.h && r1.g == r2.g) continue;
            ++counts[{(r1.h + m - r2.h) % m, (r1.g + p - r2.g) % p}];
        }
    return counts;
}

// self-conjugacy by scanning every exponent below w
inline bool self_conjugate_scan(uint64_t q, uint64_t u) {
    uint64_t w = u;
    while (w % q == 0) w /= q;
    if (w <= 2) return true;
    uint64_t x = 1 % w;
    for (uint64_t j = 0; j < w; ++j) {
        if (x == w - 1) return true;
        x = x * (q % w) % w;
    }
    return false;
}

// enumerate every canonical candidate (first nonzero pinned to exponent 0,
// zeros fixed at the given positions) and return the first full-profile
// witness plus the number of candidates checked
struct NaiveResult {
    std::optional<nps::Sequence> witness;
    uint64_t candidates = 0;
};

inline NaiveResult naive_search(uint32_t n, uint32_t p, int64_t gamma, uint32_t s) {
    // zeros occupy positions 0..s-1 in this oracle (one fixed placement)
    uint32_t period = n + s;
    std::vector<uint32_t> nonzero;
    for (uint32_t i = s; i < period; ++i) nonzero.push_back(i);
    NaiveResult res;
    std::vector<uint32_t> exps(n, 0);  // exps[0] pinned to 0
    for (;;) {
        nps::Sequence seq{p, {}};
        seq.symbols.assign(period, nps::Symbol::zero());
        for (uint32_t i = 0; i < n; ++i) seq.symbols[nonzero[i]] = nps::Symbol::root(exps[i]);
        ++res.candidates;
        if (nps::is_nps(seq, gamma)) {
            res.witness = seq;
            return res;
        }
        // odometer, rightmost digit fastest: lexicographic order, matching
        // the engine's depth-first order
        uint32_t i = n - 1;
        while (i >= 1 && exps[i] == p - 1) exps[i--] = 0;
        if (i == 0) break;
        ++exps[i];
    }
    return res;
}

}  // namespace oracle
