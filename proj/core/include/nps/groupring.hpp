#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "nps/sequence.hpp"

namespace nps {

/// Element of Z_m x Z_p, written additively. The multiplicative source
/// convention h^i g^j maps to (i, j).
struct GroupElem {
    uint32_t h = 0;
    uint32_t g = 0;
    auto operator<=>(const GroupElem&) const = default;
};

/// (m, n, k, lambda1, lambda2, mu) direct product difference set parameters;
/// n_forbidden is the order of the second factor (p throughout this library).
struct DpdsParams {
    uint32_t m = 0;
    uint32_t n_forbidden = 0;
    uint32_t k = 0;
    int64_t lambda1 = 0;
    int64_t lambda2 = 0;
    int64_t mu = 0;
    bool operator==(const DpdsParams&) const = default;
};

/// (m, n, k, lambda) relative difference set parameters: differences avoid
/// the forbidden subgroup entirely and hit everything else lambda times.
/// Kept distinct from DpdsParams so the two parameterizations cannot be
/// conflated.
struct RdsParams {
    uint32_t m = 0;
    uint32_t n_forbidden = 0;
    uint32_t k = 0;
    int64_t lambda = 0;
    bool operator==(const RdsParams&) const = default;
};

struct DpdsInstance {
    uint32_t m = 0;
    uint32_t p = 0;
    std::vector<GroupElem> elements;  // kept sorted, distinct

    void normalize();                          // sort + require distinct
    std::string to_json() const;
    static DpdsInstance from_json(std::string_view text);
};

struct DifferenceTable {
    uint32_t m = 0;
    uint32_t p = 0;
    std::vector<int64_t> counts;  // index h * p + g

    int64_t at(GroupElem e) const { return counts[size_t(e.h) * p + e.g]; }
};

/// counts[d] = #{(r1, r2) : r1 != r2, r1 - r2 = d}, componentwise mod (m, p).
DifferenceTable difference_table(const DpdsInstance& R);

struct VerifyReport {
    bool ok = true;
    std::string violation;  // first violation, empty when ok
};

/// Definition-style check: |R| = k and the three difference-count classes.
VerifyReport verify_dpds(const DpdsInstance& R, const DpdsParams& params);

/// Group-ring identity route: coefficientwise comparison of R R^(-1) against
/// (k - l1 - l2 + mu) + (l1 - mu) H + (l2 - mu) P + mu G.
VerifyReport verify_dpds_groupring(const DpdsInstance& R, const DpdsParams& params);

VerifyReport verify_rds(const DpdsInstance& R, const RdsParams& params);

/// Sequence -> difference set conversion.
/// p-ary period n:    R = {(i, b_i) : 0 <= i < n} in Z_n x Z_p with
///                    params (n, p, n, (n-gamma)/p + gamma, 0, (n-gamma)/p).
/// almost, one zero:  zero rotated to index 0 first, then
///                    R = {(i, b_i) : 1 <= i <= n} in Z_{n+1} x Z_p with
///                    params (n+1, p, n, (n-gamma-1)/p + gamma, 0, (n-gamma-1)/p).
/// Throws when the divisibility precondition fails or s >= 2.
std::pair<DpdsInstance, DpdsParams> sequence_to_dpds(const Sequence& seq, int64_t gamma);

struct EquivalenceReport {
    uint64_t sequences_checked = 0;
    std::vector<Sequence> counterexamples;
    bool ok() const { return counterexamples.empty(); }
};

/// Exhaustive oracle for the NPS <-> DPDS equivalence: enumerates every
/// sequence of the given shape (p-ary period n, or almost period n+1 with the
/// zero at index 0) and asserts is_nps(seq, gamma) <-> the conversion yields
/// a verified DPDS. Throws if p^n exceeds max_space.
EquivalenceReport equivalence_check(uint32_t n, uint32_t p, int64_t gamma, bool almost,
                                    uint64_t max_space = 10'000'000);

}  // namespace nps
