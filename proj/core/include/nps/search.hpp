#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "nps/sequence.hpp"

namespace nps {

struct SearchLimits {
    uint64_t max_nodes = 1ull << 36;  // assignments explored before aborting
    uint64_t max_millis = 0;          // 0 = unlimited
};

/// Search problem: find a sequence with n nonzero entries (period n + s,
/// s zero symbols; s = 0 is the p-ary case) whose out-of-phase
/// autocorrelation is constantly gamma.
struct SearchSpec {
    uint32_t n = 0;
    uint32_t p = 0;
    int64_t gamma = 0;
    uint32_t s = 0;
    SearchLimits limits;
    uint32_t parallel_width = 1;
};

struct SearchResult {
    enum class Outcome { Witness, ExhaustedNone, Aborted } outcome = Outcome::Aborted;
    uint64_t space_size = 0;      // canonical candidates: p^(n-1) * C(n+s-1, s-1)
    uint64_t nodes = 0;           // assignments explored
    std::optional<Sequence> witness;
    uint64_t elapsed_ms = 0;
    bool via_divisibility = false;  // settled by the divisibility gate, no scan
};

// invoked concurrently from worker threads; must be thread-safe
using ProgressFn = std::function<void(uint64_t nodes, uint64_t blocks_done, uint64_t blocks_total)>;

/// Depth-first scan over exponent assignments with the scalar symmetry fixed
/// (first nonzero symbol pinned to exponent 0) and, for almost mode, the
/// first zero rotated to position 0. Pruning keeps one exact partial state
/// per correlation C(t), t <= period/2, and rejects a branch as soon as the
/// still-unassigned terms of some C(t) cannot complete it to gamma (a sum of
/// U p-th roots of unity equals a given value iff its shifted coefficient
/// vector is reachable, an O(p) test). The scan is partitioned into prefix
/// blocks across workers; the reported result is identical to the serial
/// scan regardless of parallel_width.
SearchResult search(const SearchSpec& spec, const ProgressFn& progress = nullptr);

/// Regression harness for claimed witnesses: is_nps plus (for s <= 1) the
/// difference-set round trip.
bool verify_claimed(const Sequence& seq, int64_t gamma);

}  // namespace nps
