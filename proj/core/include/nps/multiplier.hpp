#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nps/exclusion.hpp"
#include "nps/groupring.hpp"

namespace nps {

/// Orbit partition of Z_m x Z_p under x -> t*x (componentwise).
struct OrbitSet {
    uint32_t m = 0;
    uint32_t p = 0;
    uint64_t t = 0;
    std::vector<std::vector<GroupElem>> orbits;  // each orbit listed once

    std::map<size_t, size_t> census() const;     // length -> count
    std::string census_json() const;
    /// Length-grouped tuple-list layout for visual diffing.
    std::string render_table() const;
};

/// Full orbit partition; requires gcd(t, m*p) = 1.
OrbitSet orbits(uint32_t m, uint32_t p, uint64_t t);

/// Exact targets of the counting identities for an (n+1, p, n, (n-1)/p)-RDS:
/// sum of squares  n(n+p-1)/p  and each cross sum  n(n-1)/p.
struct CountTargets {
    int64_t sq_sum = 0;
    int64_t cross = 0;
};
CountTargets lemma5_targets(uint32_t n, uint32_t p);

/// Outcome of the orbit-cover search for an (n+1, p, n, (n-1)/p)-RDS that is
/// a union of orbits. The search enumerates subsets of orbits with total size
/// n, at most one element per first component (forced by lambda2 = 0) and a
/// count vector satisfying the counting identities; every subset passing those
/// filters is then checked exactly against the RDS difference property.
///
///   Infeasible: exhaustive, no subset survives the exact check -> under the
///               multiplier premise for t, no such RDS exists.
///   Feasible:   an exactly verified RDS was found (witness attached).
///   Aborted:    node budget exceeded; no conclusion.
struct CoverOutcome {
    enum class Kind { Infeasible, Feasible, Aborted } kind = Kind::Aborted;
    uint64_t nodes = 0;
    uint64_t relaxation_covers = 0;  // subsets that passed the counting filters
    std::optional<DpdsInstance> witness;
    std::string detail;
};

CoverOutcome orbit_cover_feasible(const OrbitSet& os, uint32_t n, uint32_t p,
                                  uint64_t node_budget = 200'000'000);

/// Composes orbits() and orbit_cover_feasible(); emits a certificate iff the
/// cover search is exhaustively infeasible. The certificate is conditional on
/// the premise that t is a multiplier of the putative set (recorded in it).
/// Requires p | n-1 and gcd(t, (n+1)p) = 1.
std::optional<Certificate> prove_nonexistence_by_multiplier(uint32_t n, uint32_t p, uint64_t t,
                                                            uint64_t node_budget = 200'000'000);

/// Candidate multipliers to try: primes dividing n that are coprime to (n+1)p.
std::vector<uint64_t> multiplier_candidates(uint32_t n, uint32_t p);

}  // namespace nps
