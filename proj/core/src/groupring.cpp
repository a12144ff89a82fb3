#include "nps/groupring.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace nps {

void DpdsInstance::normalize() {
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
        throw std::invalid_argument("DpdsInstance elements must be distinct");
    for (auto& e : elements)
        if (e.h >= m || e.g >= p) throw std::invalid_argument("DpdsInstance element out of range");
}

DifferenceTable difference_table(const DpdsInstance& R) {
    DifferenceTable T{R.m, R.p, std::vector<int64_t>(size_t(R.m) * R.p, 0)};
    for (const auto& r1 : R.elements)
        for (const auto& r2 : R.elements) {
            if (r1 == r2) continue;
            uint32_t dh = (r1.h + R.m - r2.h) % R.m;
            uint32_t dg = (r1.g + R.p - r2.g) % R.p;
            ++T.counts[size_t(dh) * R.p + dg];
        }
    return T;
}

namespace {

std::string elem_str(uint32_t h, uint32_t g) {
    return "(" + std::to_string(h) + "," + std::to_string(g) + ")";
}

}  // namespace

VerifyReport verify_dpds(const DpdsInstance& R, const DpdsParams& params) {
    if (params.m != R.m || params.n_forbidden != R.p)
        throw std::invalid_argument("verify_dpds: group dimensions disagree with params");
    if (R.elements.size() != params.k)
        return {false, "size mismatch: |R| = " + std::to_string(R.elements.size()) +
                           ", k = " + std::to_string(params.k)};
    DifferenceTable T = difference_table(R);
    for (uint32_t h = 0; h < R.m; ++h)
        for (uint32_t g = 0; g < R.p; ++g) {
            if (h == 0 && g == 0) continue;
            int64_t want = (g == 0) ? params.lambda1 : (h == 0) ? params.lambda2 : params.mu;
            int64_t got = T.counts[size_t(h) * R.p + g];
            if (got != want)
                return {false, "count violation at " + elem_str(h, g) + ": got " +
                                   std::to_string(got) + ", want " + std::to_string(want)};
        }
    return {};
}

VerifyReport verify_dpds_groupring(const DpdsInstance& R, const DpdsParams& params) {
    if (params.m != R.m || params.n_forbidden != R.p)
        throw std::invalid_argument("verify_dpds_groupring: group dimensions disagree with params");
    if (R.elements.size() != params.k)
        return {false, "size mismatch: |R| = " + std::to_string(R.elements.size()) +
                           ", k = " + std::to_string(params.k)};
    // R R^(-1) includes the k diagonal pairs at the identity.
    DifferenceTable T = difference_table(R);
    T.counts[0] += params.k;
    for (uint32_t h = 0; h < R.m; ++h)
        for (uint32_t g = 0; g < R.p; ++g) {
            int64_t rhs = params.mu;                                  // mu * G
            if (g == 0) rhs += params.lambda1 - params.mu;            // (l1 - mu) * H
            if (h == 0) rhs += params.lambda2 - params.mu;            // (l2 - mu) * P
            if (h == 0 && g == 0) rhs += params.k - params.lambda1 - params.lambda2 + params.mu;
            int64_t got = T.counts[size_t(h) * R.p + g];
            if (got != rhs)
                return {false, "group-ring coefficient mismatch at " + elem_str(h, g) + ": got " +
                                   std::to_string(got) + ", want " + std::to_string(rhs)};
        }
    return {};
}

VerifyReport verify_rds(const DpdsInstance& R, const RdsParams& params) {
    if (params.m != R.m || params.n_forbidden != R.p)
        throw std::invalid_argument("verify_rds: group dimensions disagree with params");
    if (R.elements.size() != params.k)
        return {false, "size mismatch: |R| = " + std::to_string(R.elements.size()) +
                           ", k = " + std::to_string(params.k)};
    DifferenceTable T = difference_table(R);
    for (uint32_t h = 0; h < R.m; ++h)
        for (uint32_t g = 0; g < R.p; ++g) {
            if (h == 0 && g == 0) continue;
            int64_t want = (h == 0) ? 0 : params.lambda;
            int64_t got = T.counts[size_t(h) * R.p + g];
            if (got != want)
                return {false, "count violation at " + elem_str(h, g) + ": got " +
                                   std::to_string(got) + ", want " + std::to_string(want)};
        }
    return {};
}

std::pair<DpdsInstance, DpdsParams> sequence_to_dpds(const Sequence& seq, int64_t gamma) {
    uint32_t s = seq.zero_count();
    uint32_t period = seq.period();
    if (s == 0) {
        int64_t n = period;
        if ((n - gamma) % seq.p != 0)
            throw std::invalid_argument("sequence_to_dpds: p does not divide n - gamma");
        int64_t mu = (n - gamma) / seq.p;
        DpdsInstance R{period, seq.p, {}};
        for (uint32_t i = 0; i < period; ++i)
            R.elements.push_back({i, seq.symbols[i].exponent()});
        R.normalize();
        return {R, DpdsParams{period, seq.p, period, mu + gamma, 0, mu}};
    }
    if (s == 1) {
        // rotate the zero symbol to index 0 (legitimate by shift invariance)
        uint32_t z = 0;
        while (!seq.symbols[z].is_zero()) ++z;
        Sequence rot = seq.shifted(z);
        int64_t n = period - 1;  // nonzero entries
        if ((n - gamma - 1) % seq.p != 0)
            throw std::invalid_argument("sequence_to_dpds: p does not divide n - gamma - 1");
        int64_t mu = (n - gamma - 1) / seq.p;
        DpdsInstance R{period, seq.p, {}};
        for (uint32_t i = 1; i < period; ++i)
            R.elements.push_back({i, rot.symbols[i].exponent()});
        R.normalize();
        return {R, DpdsParams{period, seq.p, uint32_t(n), mu + gamma, 0, mu}};
    }
    throw std::invalid_argument("sequence_to_dpds: no conversion for s >= 2 zero symbols");
}

EquivalenceReport equivalence_check(uint32_t n, uint32_t p, int64_t gamma, bool almost,
                                    uint64_t max_space) {
    uint64_t space = 1;
    for (uint32_t i = 0; i < n; ++i) {
        space *= p;
        if (space > max_space) throw std::invalid_argument("equivalence_check: search space exceeds bound");
    }

    uint32_t period = almost ? n + 1 : n;
    int64_t divisor_arg = almost ? int64_t(n) - gamma - 1 : int64_t(n) - gamma;
    bool gate = divisor_arg % p == 0;

    EquivalenceReport rep;
    std::vector<uint32_t> b(n, 0);
    Sequence seq{p, {}};
    seq.symbols.assign(period, Symbol::zero());
    for (uint64_t code = 0; code < space; ++code) {
        uint64_t c = code;
        for (uint32_t i = 0; i < n; ++i) {
            b[i] = uint32_t(c % p);
            c /= p;
        }
        uint32_t off = almost ? 1 : 0;
        for (uint32_t i = 0; i < n; ++i) seq.symbols[off + i] = Symbol::root(b[i]);

        bool lhs = is_nps(seq, gamma);
        bool rhs = false;
        if (gate) {
            auto [R, params] = sequence_to_dpds(seq, gamma);
            rhs = verify_dpds(R, params).ok;
        }
        ++rep.sequences_checked;
        if (lhs != rhs) rep.counterexamples.push_back(seq);
    }
    return rep;
}

std::string DpdsInstance::to_json() const {
    std::string out = "{\"m\":" + std::to_string(m) + ",\"p\":" + std::to_string(p) + ",\"elements\":[";
    for (size_t i = 0; i < elements.size(); ++i) {
        if (i) out += ",";
        out += "[" + std::to_string(elements[i].h) + "," + std::to_string(elements[i].g) + "]";
    }
    out += "]}";
    return out;
}

DpdsInstance DpdsInstance::from_json(std::string_view text) {
    auto read_num = [&](size_t& pos) -> uint64_t {
        while (pos < text.size() && !isdigit((unsigned char)text[pos])) ++pos;
        size_t start = pos;
        while (pos < text.size() && isdigit((unsigned char)text[pos])) ++pos;
        if (start == pos) throw std::invalid_argument("malformed DpdsInstance json");
        return std::stoull(std::string(text.substr(start, pos - start)));
    };
    size_t pos = text.find("\"m\":");
    if (pos == std::string_view::npos) throw std::invalid_argument("malformed DpdsInstance json");
    uint64_t m = read_num(pos);
    pos = text.find("\"p\":");
    uint64_t p = read_num(pos);
    pos = text.find('[');
    size_t end = text.rfind(']');
    DpdsInstance R{uint32_t(m), uint32_t(p), {}};
    ++pos;
    while (pos < end) {
        size_t open = text.find('[', pos);
        if (open == std::string_view::npos || open >= end) break;
        pos = open;
        uint64_t h = read_num(pos);
        uint64_t g = read_num(pos);
        R.elements.push_back({uint32_t(h), uint32_t(g)});
    }
    R.normalize();
    return R;
}

}  // namespace nps
