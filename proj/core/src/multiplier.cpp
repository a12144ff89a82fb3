#include "nps/multiplier.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "nps/numtheory.hpp"

namespace nps {

std::map<size_t, size_t> OrbitSet::census() const {
    std::map<size_t, size_t> c;
    for (auto& o : orbits) ++c[o.size()];
    return c;
}

std::string OrbitSet::census_json() const {
    std::string out = "{";
    bool first = true;
    for (auto& [len, cnt] : census()) {
        if (!first) out += ",";
        first = false;
        out += "\"" + std::to_string(len) + "\":" + std::to_string(cnt);
    }
    out += "}";
    return out;
}

std::string OrbitSet::render_table() const {
    std::string out;
    for (auto& [len, cnt] : census()) {
        out += "orbits of length " + std::to_string(len) + "\n";
        for (auto& o : orbits) {
            if (o.size() != len) continue;
            out += "  {";
            for (size_t i = 0; i < o.size(); ++i) {
                if (i) out += ", ";
                out += "(" + std::to_string(o[i].h) + ", " + std::to_string(o[i].g) + ")";
            }
            out += "}\n";
        }
    }
    return out;
}

OrbitSet orbits(uint32_t m, uint32_t p, uint64_t t) {
    if (m == 0 || p == 0) throw std::invalid_argument("orbits: empty group");
    if (std::gcd(t, uint64_t(m) * p) != 1) throw std::invalid_argument("orbits: gcd(t, m*p) != 1");
    OrbitSet os{m, p, t, {}};
    std::vector<char> seen(size_t(m) * p, 0);
    for (uint32_t h = 0; h < m; ++h)
        for (uint32_t g = 0; g < p; ++g) {
            if (seen[size_t(h) * p + g]) continue;
            std::vector<GroupElem> orbit;
            uint32_t ch = h, cg = g;
            do {
                seen[size_t(ch) * p + cg] = 1;
                orbit.push_back({ch, cg});
                ch = uint32_t(t * ch % m);
                cg = uint32_t(t * cg % p);
            } while (ch != h || cg != g);
            os.orbits.push_back(std::move(orbit));
        }
    return os;
}

CountTargets lemma5_targets(uint32_t n, uint32_t p) {
    int64_t sq_num = int64_t(n) * (int64_t(n) + p - 1);
    int64_t cr_num = int64_t(n) * (int64_t(n) - 1);
    if (sq_num % p || cr_num % p)
        throw std::invalid_argument("lemma5_targets: counting identities are not integral");
    return {sq_num / p, cr_num / p};
}

namespace {

struct CoverSearch {
    uint32_t m, p, k;
    int64_t lambda;
    CountTargets targets;
    const std::vector<std::vector<GroupElem>>* orbs;  // usable, sorted
    std::vector<uint64_t> suffix_cap;

    std::vector<char> used_h;
    std::vector<int64_t> s_count;
    std::vector<uint32_t> chosen;  // orbit indices
    uint32_t size = 0;
    int64_t sq_partial = 0;

    uint64_t nodes = 0, budget = 0, relax = 0;
    bool aborted = false;
    std::optional<DpdsInstance> witness;

    std::vector<int32_t> diff_counts;  // scratch for the exact check

    bool exact_check() {
        // The chosen set has pairwise distinct first components, so no
        // difference lands in the forbidden subgroup and the total ordered
        // difference count is k(k-1) = lambda * (mp - p); it is an RDS iff no
        // count exceeds lambda.
        std::fill(diff_counts.begin(), diff_counts.end(), 0);
        std::vector<GroupElem> elems;
        elems.reserve(k);
        for (uint32_t oi : chosen)
            for (auto& e : (*orbs)[oi]) elems.push_back(e);
        for (size_t i = 0; i < elems.size(); ++i)
            for (size_t j = i + 1; j < elems.size(); ++j) {
                uint32_t dh = (elems[i].h + m - elems[j].h) % m;
                uint32_t dg = (elems[i].g + p - elems[j].g) % p;
                if (++diff_counts[size_t(dh) * p + dg] > lambda) return false;
                dh = (m - dh) % m;
                dg = (p - dg) % p;
                if (++diff_counts[size_t(dh) * p + dg] > lambda) return false;
            }
        DpdsInstance R{m, p, std::move(elems)};
        R.normalize();
        witness = std::move(R);
        return true;
    }

    bool counts_match() {
        int64_t sq = 0;
        for (auto v : s_count) sq += v * v;
        if (sq != targets.sq_sum) return false;
        for (uint32_t i = 1; i <= (p - 1 + 1) / 2 && p > 1; ++i) {
            int64_t cross = 0;
            for (uint32_t j = 0; j < p; ++j) cross += s_count[j] * s_count[(j + p - i) % p];
            if (cross != targets.cross) return false;
        }
        return true;
    }

    // returns true when the search should stop (witness found or aborted)
    bool dfs(uint32_t idx) {
        if (aborted) return true;
        if (++nodes > budget) {
            aborted = true;
            return true;
        }
        if (size == k) {
            if (!counts_match()) return false;
            ++relax;
            return exact_check();
        }
        if (idx == orbs->size()) return false;
        if (size + suffix_cap[idx] < k) return false;
        // lower bound on the final sum of squares: remaining elements spread
        // as evenly as possible over the p residue classes
        int64_t rem = int64_t(k) - size;
        if (sq_partial + rem * rem / int64_t(p) > targets.sq_sum) return false;

        const auto& orbit = (*orbs)[idx];
        // include
        if (size + orbit.size() <= k) {
            bool conflict = false;
            for (auto& e : orbit)
                if (used_h[e.h]) {
                    conflict = true;
                    break;
                }
            if (!conflict) {
                for (auto& e : orbit) {
                    used_h[e.h] = 1;
                    sq_partial += 2 * s_count[e.g] + 1;
                    ++s_count[e.g];
                }
                size += uint32_t(orbit.size());
                chosen.push_back(idx);
                if (dfs(idx + 1)) return true;
                chosen.pop_back();
                size -= uint32_t(orbit.size());
                for (auto& e : orbit) {
                    --s_count[e.g];
                    sq_partial -= 2 * s_count[e.g] + 1;
                    used_h[e.h] = 0;
                }
            }
        }
        // skip
        return dfs(idx + 1);
    }
};

}  // namespace

CoverOutcome orbit_cover_feasible(const OrbitSet& os, uint32_t n, uint32_t p, uint64_t node_budget) {
    if (os.p != p || os.m != n + 1)
        throw std::invalid_argument("orbit_cover_feasible: orbit set is not over Z_(n+1) x Z_p");
    if ((int64_t(n) - 1) % p != 0)
        throw std::invalid_argument("orbit_cover_feasible: p does not divide n-1");

    // orbits with a repeated first component can never be part of a cover
    std::vector<std::vector<GroupElem>> usable;
    for (auto& o : os.orbits) {
        std::vector<uint32_t> hs;
        hs.reserve(o.size());
        for (auto& e : o) hs.push_back(e.h);
        std::sort(hs.begin(), hs.end());
        if (std::adjacent_find(hs.begin(), hs.end()) == hs.end()) usable.push_back(o);
    }
    std::sort(usable.begin(), usable.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });

    CoverSearch cs;
    cs.m = os.m;
    cs.p = p;
    cs.k = n;
    cs.lambda = (int64_t(n) - 1) / p;
    cs.targets = lemma5_targets(n, p);
    cs.orbs = &usable;
    cs.suffix_cap.assign(usable.size() + 1, 0);
    for (size_t i = usable.size(); i-- > 0;)
        cs.suffix_cap[i] = cs.suffix_cap[i + 1] + usable[i].size();
    cs.used_h.assign(os.m, 0);
    cs.s_count.assign(p, 0);
    cs.diff_counts.assign(size_t(os.m) * p, 0);
    cs.budget = node_budget;

    cs.dfs(0);

    CoverOutcome out;
    out.nodes = cs.nodes;
    out.relaxation_covers = cs.relax;
    if (cs.aborted) {
        out.kind = CoverOutcome::Kind::Aborted;
        out.detail = "node budget exceeded";
    } else if (cs.witness) {
        out.kind = CoverOutcome::Kind::Feasible;
        out.witness = cs.witness;
        out.detail = "exactly verified orbit cover found";
    } else {
        out.kind = CoverOutcome::Kind::Infeasible;
        out.detail = std::to_string(cs.relax) +
                     " counting-feasible covers, all refuted by the exact difference check";
    }
    return out;
}

std::optional<Certificate> prove_nonexistence_by_multiplier(uint32_t n, uint32_t p, uint64_t t,
                                                            uint64_t node_budget) {
    if ((int64_t(n) - 1) % p != 0)
        throw std::invalid_argument("prove_nonexistence_by_multiplier: p does not divide n-1");
    if (std::gcd(t, uint64_t(n + 1) * p) != 1)
        throw std::invalid_argument("prove_nonexistence_by_multiplier: gcd(t, (n+1)p) != 1");

    OrbitSet os = orbits(n + 1, p, t);
    CoverOutcome out = orbit_cover_feasible(os, n, p, node_budget);
    if (out.kind != CoverOutcome::Kind::Infeasible) return std::nullopt;

    Certificate c;
    c.rule = Rule::MultiplierInfeasible;
    c.n = n;
    c.p = p;
    c.gamma = 0;
    c.mode = Mode::almost;
    c.s = 1;
    c.aux = int64_t(t);
    std::string census;
    for (auto& [len, cnt] : os.census()) {
        if (!census.empty()) census += ", ";
        census += std::to_string(cnt) + " of length " + std::to_string(len);
    }
    c.note = "premise: t=" + std::to_string(t) + " is a multiplier; orbit census: " + census +
             "; " + out.detail;
    return c;
}

std::vector<uint64_t> multiplier_candidates(uint32_t n, uint32_t p) {
    std::vector<uint64_t> ts;
    for (auto& pp : factorize(n))
        if (std::gcd(pp.q, uint64_t(n + 1) * p) == 1) ts.push_back(pp.q);
    return ts;
}

}  // namespace nps
