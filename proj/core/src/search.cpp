#include "nps/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "nps/groupring.hpp"
#include "nps/numtheory.hpp"

namespace nps {

namespace {

using Clock = std::chrono::steady_clock;

// Exact partial state of one correlation C(t): raw counts of the exponent
// differences contributed by completed term pairs, plus the number of pairs
// still unknown.
struct CorrState {
    std::vector<int32_t> cnt;  // length p
    int32_t total = 0;         // sum of cnt
    int32_t unknown = 0;       // pairs with at least one unassigned endpoint
};

struct Dfs {
    // problem
    uint32_t period = 0, p = 0, n = 0;
    int64_t gamma = 0;
    std::vector<uint32_t> pos;       // nonzero positions, ascending
    std::vector<int32_t> pos_index;  // period -> index into pos, -1 for zero
    std::vector<uint32_t> tracked;   // t values 1..period/2

    // state
    std::vector<int32_t> expo;  // per nonzero index, -1 = unassigned
    std::vector<CorrState> corr;

    // control
    std::atomic<uint64_t>* nodes = nullptr;
    std::atomic<bool>* stop = nullptr;
    uint64_t node_check_mask = 1023;
    uint64_t max_nodes = 0;
    Clock::time_point deadline{};
    bool has_deadline = false;

    void init(uint32_t period_, uint32_t p_, int64_t gamma_, const std::vector<uint32_t>& nonzero) {
        period = period_;
        p = p_;
        gamma = gamma_;
        pos = nonzero;
        n = uint32_t(pos.size());
        pos_index.assign(period, -1);
        for (uint32_t i = 0; i < n; ++i) pos_index[pos[i]] = int32_t(i);
        tracked.clear();
        for (uint32_t t = 1; t <= period / 2; ++t) tracked.push_back(t);
        expo.assign(n, -1);
        corr.assign(period / 2 + 1, {});
        for (uint32_t t : tracked) {
            corr[t].cnt.assign(p, 0);
            corr[t].total = 0;
            corr[t].unknown = 0;
            for (uint32_t i = 0; i < period; ++i) {
                uint32_t j = i + t < period ? i + t : i + t - period;
                if (pos_index[i] >= 0 && pos_index[j] >= 0) ++corr[t].unknown;
            }
        }
    }

    // can the remaining `unknown` roots of unity complete cnt to gamma?
    bool reachable(const CorrState& c) const {
        int64_t num = int64_t(c.total) + c.unknown - gamma;
        if (num < 0 || num % p) return false;
        int64_t d = num / p;
        if (gamma + d < c.cnt[0]) return false;
        for (uint32_t e = 1; e < p; ++e)
            if (d < c.cnt[e]) return false;
        return true;
    }

    // Applies the terms completed by assigning position pi (expo already set);
    // returns false if some affected correlation became unreachable. When
    // returning false, `applied` reports how many t values were updated so the
    // caller can undo.
    bool apply(uint32_t ii, size_t& applied) {
        uint32_t i = pos[ii];
        applied = 0;
        for (uint32_t t : tracked) {
            CorrState& c = corr[t];
            bool touched = false;
            uint32_t fwd = i + t < period ? i + t : i + t - period;   // pair (i, i+t)
            int32_t fi = pos_index[fwd];
            if (fi >= 0 && expo[fi] >= 0) {
                uint32_t d = uint32_t((expo[ii] - expo[fi] + int32_t(p)) % int32_t(p));
                ++c.cnt[d];
                ++c.total;
                --c.unknown;
                touched = true;
            }
            uint32_t bwd = i >= t ? i - t : i + period - t;           // pair (i-t, i)
            int32_t bi = pos_index[bwd];
            if (bi >= 0 && bi != int32_t(ii) && expo[bi] >= 0) {
                uint32_t d = uint32_t((expo[bi] - expo[ii] + int32_t(p)) % int32_t(p));
                ++c.cnt[d];
                ++c.total;
                --c.unknown;
                touched = true;
            }
            if (touched) ++applied;
            if (touched && !reachable(c)) return false;
        }
        return true;
    }

    void undo(uint32_t ii, size_t applied) {
        uint32_t i = pos[ii];
        for (uint32_t t : tracked) {
            if (applied == 0) break;
            CorrState& c = corr[t];
            bool touched = false;
            uint32_t fwd = i + t < period ? i + t : i + t - period;
            int32_t fi = pos_index[fwd];
            if (fi >= 0 && expo[fi] >= 0) {
                uint32_t d = uint32_t((expo[ii] - expo[fi] + int32_t(p)) % int32_t(p));
                --c.cnt[d];
                --c.total;
                ++c.unknown;
                touched = true;
            }
            uint32_t bwd = i >= t ? i - t : i + period - t;
            int32_t bi = pos_index[bwd];
            if (bi >= 0 && bi != int32_t(ii) && expo[bi] >= 0) {
                uint32_t d = uint32_t((expo[bi] - expo[ii] + int32_t(p)) % int32_t(p));
                --c.cnt[d];
                --c.total;
                ++c.unknown;
                touched = true;
            }
            if (touched) --applied;
        }
    }

    bool assign(uint32_t ii, int32_t e, size_t& applied) {
        expo[ii] = e;
        uint64_t seen = nodes->fetch_add(1, std::memory_order_relaxed) + 1;
        if ((seen & node_check_mask) == 0) {
            if (seen > max_nodes) stop->store(true, std::memory_order_relaxed);
            if (has_deadline && Clock::now() > deadline) stop->store(true, std::memory_order_relaxed);
        }
        if (!apply(ii, applied)) return false;
        return true;
    }

    void unassign(uint32_t ii, size_t applied) {
        undo(ii, applied);
        expo[ii] = -1;
    }

    // True iff every correlation can still reach gamma from the initial
    // state. Correlations whose term pairs are all pre-resolved (many zero
    // symbols) are never touched by apply(), so they must be screened here.
    bool init_feasible() const {
        for (uint32_t t : tracked)
            if (!reachable(corr[t])) return false;
        return true;
    }

    // full DFS from free index `ii`; finds the first witness in
    // lexicographic exponent order and leaves the state fully unwound
    bool run(uint32_t ii, std::optional<Sequence>& found, bool& abandon,
             const std::function<bool()>& should_abandon) {
        if (stop->load(std::memory_order_relaxed)) return false;
        if (should_abandon && should_abandon()) {
            abandon = true;
            return false;
        }
        if (ii == n) {
            found = snapshot();
            return true;
        }
        for (int32_t e = 0; e < int32_t(p); ++e) {
            size_t applied = 0;
            if (assign(ii, e, applied)) {
                bool hit = run(ii + 1, found, abandon, should_abandon);
                unassign(ii, applied);
                if (hit) return true;
                if (abandon || stop->load(std::memory_order_relaxed)) return false;
                continue;
            }
            unassign(ii, applied);
        }
        return false;
    }

    Sequence snapshot() const {
        Sequence seq{p, {}};
        seq.symbols.assign(period, Symbol::zero());
        for (uint32_t i = 0; i < n; ++i) seq.symbols[pos[i]] = Symbol::root(uint32_t(expo[i]));
        return seq;
    }
};

uint64_t pow_u64_sat(uint64_t b, uint32_t e) {
    unsigned __int128 v = 1;
    for (uint32_t i = 0; i < e; ++i) {
        v *= b;
        if (v > UINT64_MAX) return UINT64_MAX;
    }
    return uint64_t(v);
}

uint64_t binom_u64(uint32_t a, uint32_t b) {
    if (b > a) return 0;
    unsigned __int128 v = 1;
    for (uint32_t i = 1; i <= b; ++i) v = v * (a - b + i) / i;
    return v > UINT64_MAX ? UINT64_MAX : uint64_t(v);
}

// all s-subsets of {0,..,period-1} containing 0, lexicographic
void zero_placements(uint32_t period, uint32_t s, std::vector<std::vector<uint32_t>>& out) {
    std::vector<uint32_t> cur{0};
    std::function<void(uint32_t)> rec = [&](uint32_t from) {
        if (cur.size() == s) {
            out.push_back(cur);
            return;
        }
        for (uint32_t v = from; v < period; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
}

}  // namespace

SearchResult search(const SearchSpec& spec, const ProgressFn& progress) {
    if (spec.n == 0 || !is_prime(spec.p)) throw std::invalid_argument("search: need n >= 1 and prime p");
    auto t0 = Clock::now();
    uint32_t period = spec.n + spec.s;

    SearchResult res;
    res.space_size = pow_u64_sat(spec.p, spec.n - 1);
    if (spec.s >= 1) {
        uint64_t combos = binom_u64(period - 1, spec.s - 1);
        res.space_size = res.space_size == UINT64_MAX ? UINT64_MAX : res.space_size * combos;
    }

    // divisibility gate (no gate exists for s >= 2)
    if (spec.s <= 1) {
        int64_t d = spec.s == 0 ? int64_t(spec.n) - spec.gamma : int64_t(spec.n) - spec.gamma - 1;
        if (((d % spec.p) + spec.p) % spec.p != 0) {
            res.outcome = SearchResult::Outcome::ExhaustedNone;
            res.via_divisibility = true;
            res.elapsed_ms = 0;
            return res;
        }
    }

    std::vector<std::vector<uint32_t>> placements;
    if (spec.s == 0) {
        placements.push_back({});
    } else {
        zero_placements(period, spec.s, placements);
    }

    std::atomic<uint64_t> nodes{0};
    std::atomic<bool> stop{false};

    // prefix blocks: fix the first depth free exponents per block
    uint32_t width = std::max(1u, spec.parallel_width);
    uint32_t depth = 0;
    uint64_t blocks = 1;
    while (depth < spec.n - 1 && blocks < uint64_t(width) * 8) {
        blocks *= spec.p;
        ++depth;
    }

    std::optional<Sequence> final_witness;

    for (auto& zeros : placements) {
        std::vector<uint32_t> nonzero;
        std::vector<char> is_zero_pos(period, 0);
        for (uint32_t z : zeros) is_zero_pos[z] = 1;
        for (uint32_t i = 0; i < period; ++i)
            if (!is_zero_pos[i]) nonzero.push_back(i);

        {
            // mod-p screen: correlations whose pairs are all pre-resolved can
            // never be fixed up later, and N_t - gamma must be 0 mod p
            Dfs probe;
            probe.init(period, spec.p, spec.gamma, nonzero);
            if (!probe.init_feasible()) continue;
        }

        std::atomic<uint64_t> next_block{0};
        std::atomic<uint64_t> best_block{UINT64_MAX};
        std::atomic<uint64_t> blocks_done{0};
        std::vector<std::optional<Sequence>> slot(blocks);
        std::mutex slot_mu;

        auto worker = [&] {
            Dfs dfs;
            dfs.init(period, spec.p, spec.gamma, nonzero);
            dfs.nodes = &nodes;
            dfs.stop = &stop;
            dfs.max_nodes = spec.limits.max_nodes;
            if (spec.limits.max_millis > 0) {
                dfs.has_deadline = true;
                dfs.deadline = t0 + std::chrono::milliseconds(spec.limits.max_millis);
            }
            for (;;) {
                uint64_t b = next_block.fetch_add(1);
                if (b >= blocks) return;
                if (stop.load(std::memory_order_relaxed)) return;
                if (b > best_block.load(std::memory_order_relaxed)) {
                    blocks_done.fetch_add(1);
                    continue;
                }
                // pin the scalar symmetry and the block prefix; block index is
                // big-endian in the free positions so that ascending block
                // order equals the serial depth-first order
                size_t applied0 = 0;
                bool ok = dfs.assign(0, 0, applied0);
                std::vector<size_t> applied(depth, 0);
                std::vector<int32_t> digits(depth, 0);
                uint64_t code = b;
                for (uint32_t j = depth; j-- > 0;) {
                    digits[j] = int32_t(code % spec.p);
                    code /= spec.p;
                }
                uint32_t assigned = 0;
                for (uint32_t j = 0; ok && j < depth; ++j) {
                    ok = dfs.assign(1 + j, digits[j], applied[j]);
                    ++assigned;
                    if (!ok) break;
                }
                if (ok) {
                    std::optional<Sequence> found;
                    bool abandon = false;
                    auto should_abandon = [&] { return b > best_block.load(std::memory_order_relaxed); };
                    dfs.run(depth + 1, found, abandon, should_abandon);
                    if (found) {
                        std::lock_guard<std::mutex> lk(slot_mu);
                        slot[b] = std::move(found);
                        uint64_t cur = best_block.load();
                        while (b < cur && !best_block.compare_exchange_weak(cur, b)) {
                        }
                    }
                }
                // undo the prefix
                for (uint32_t j = assigned; j-- > 0;) dfs.unassign(1 + j, applied[j]);
                dfs.unassign(0, applied0);
                uint64_t done = blocks_done.fetch_add(1) + 1;
                if (progress) progress(nodes.load(), done, blocks);
            }
        };

        uint32_t nthreads = std::min<uint32_t>(width, std::thread::hardware_concurrency() > 0
                                                          ? std::thread::hardware_concurrency()
                                                          : 1);
        nthreads = std::max(1u, std::min(nthreads, uint32_t(blocks)));
        if (nthreads == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (uint32_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }

        if (stop.load()) break;
        uint64_t bb = best_block.load();
        if (bb != UINT64_MAX) {
            final_witness = slot[bb];
            break;
        }
    }

    res.nodes = nodes.load();
    res.elapsed_ms = uint64_t(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count());
    if (stop.load()) {
        res.outcome = SearchResult::Outcome::Aborted;
    } else if (final_witness) {
        if (!is_nps(*final_witness, spec.gamma))
            throw std::logic_error("search produced a non-witness; pruning bug");
        res.outcome = SearchResult::Outcome::Witness;
        res.witness = std::move(final_witness);
    } else {
        res.outcome = SearchResult::Outcome::ExhaustedNone;
    }
    return res;
}

bool verify_claimed(const Sequence& seq, int64_t gamma) {
    if (!is_nps(seq, gamma)) return false;
    if (seq.zero_count() >= 2) return true;  // no difference-set theorem to cross-check
    try {
        auto [R, params] = sequence_to_dpds(seq, gamma);
        return verify_dpds(R, params).ok;
    } catch (const std::invalid_argument&) {
        return false;  // divisibility gate refuted the claim
    }
}

}  // namespace nps
