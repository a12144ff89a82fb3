#include "nps/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "nps/numtheory.hpp"

namespace nps {

uint32_t Sequence::zero_count() const {
    uint32_t s = 0;
    for (auto& sym : symbols) s += sym.is_zero();
    return s;
}

Sequence Sequence::shifted(uint32_t k) const {
    Sequence r{p, {}};
    uint32_t n = period();
    r.symbols.reserve(n);
    for (uint32_t i = 0; i < n; ++i) r.symbols.push_back(symbols[(i + k) % n]);
    return r;
}

Sequence Sequence::scaled(uint32_t c) const {
    Sequence r{p, symbols};
    for (auto& sym : r.symbols)
        if (!sym.is_zero()) sym = Symbol::root((sym.exponent() + c) % p);
    return r;
}

AutocorrProfile autocorrelation(const Sequence& seq) {
    uint32_t n = seq.period();
    uint32_t p = seq.p;
    AutocorrProfile prof;
    prof.values.reserve(n);
    for (uint32_t t = 0; t < n; ++t) {
        std::vector<int128> cnt(p, 0);
        for (uint32_t i = 0; i < n; ++i) {
            const Symbol& a = seq.symbols[i];
            const Symbol& b = seq.symbols[(i + t) % n];
            if (a.is_zero() || b.is_zero()) continue;
            uint32_t d = (a.exponent() + p - b.exponent()) % p;
            cnt[d] += 1;
        }
        prof.values.push_back(CycInt::from_coeffs(p, std::move(cnt)));
    }
    return prof;
}

bool is_nps(const Sequence& seq, int64_t gamma) {
    AutocorrProfile prof = autocorrelation(seq);
    for (uint32_t t = 1; t < seq.period(); ++t) {
        auto v = prof.values[t].as_integer();
        if (!v || *v != gamma) return false;
    }
    return true;
}

Sequence canonicalize(const Sequence& seq) {
    uint32_t n = seq.period();
    Sequence best = seq;
    for (uint32_t k = 0; k < n; ++k) {
        Sequence sh = seq.shifted(k);
        for (uint32_t c = 0; c < seq.p; ++c) {
            Sequence candidate = sh.scaled(c);
            if (candidate.symbols < best.symbols) best = std::move(candidate);
        }
    }
    return best;
}

std::string Sequence::to_text() const {
    std::string out = "p=" + std::to_string(p) + " n=" + std::to_string(period()) + "\n";
    for (uint32_t i = 0; i < period(); ++i) {
        if (i > 0) out += ",";
        if (symbols[i].is_zero())
            out += "0";
        else
            out += "z^" + std::to_string(symbols[i].exponent());
    }
    out += "\n";
    return out;
}

Sequence Sequence::parse_text(std::string_view text) {
    auto fail = [] { throw std::invalid_argument("malformed sequence text"); };
    size_t nl = text.find('\n');
    if (nl == std::string_view::npos) fail();
    std::string_view header = text.substr(0, nl);
    std::string_view body = text.substr(nl + 1);
    if (header.substr(0, 2) != "p=") fail();
    size_t sp = header.find(' ');
    if (sp == std::string_view::npos || header.substr(sp + 1, 2) != "n=") fail();
    uint64_t p = std::stoull(std::string(header.substr(2, sp - 2)));
    uint64_t n = std::stoull(std::string(header.substr(sp + 3)));
    if (!is_prime(p)) throw std::invalid_argument("sequence modulus must be prime");

    while (!body.empty() && (body.back() == '\n' || body.back() == '\r' || body.back() == ' '))
        body.remove_suffix(1);
    Sequence seq{uint32_t(p), {}};
    size_t pos = 0;
    while (pos <= body.size() && !body.empty()) {
        size_t next = body.find(',', pos);
        std::string_view tok = body.substr(pos, next == std::string_view::npos ? next : next - pos);
        if (tok == "0") {
            seq.symbols.push_back(Symbol::zero());
        } else if (tok.substr(0, 2) == "z^") {
            uint64_t e = std::stoull(std::string(tok.substr(2)));
            if (e >= p) throw std::invalid_argument("symbol exponent out of range");
            seq.symbols.push_back(Symbol::root(uint32_t(e)));
        } else {
            fail();
        }
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    if (seq.period() != n) throw std::invalid_argument("sequence length does not match header");
    return seq;
}

std::string Sequence::to_json() const {
    std::string out = "{\"p\":" + std::to_string(p) + ",\"n\":" + std::to_string(period()) + ",\"symbols\":[";
    for (uint32_t i = 0; i < period(); ++i) {
        if (i > 0) out += ",";
        if (symbols[i].is_zero())
            out += "\"0\"";
        else
            out += "\"z^" + std::to_string(symbols[i].exponent()) + "\"";
    }
    out += "]}";
    return out;
}

Sequence Sequence::from_json(std::string_view text) {
    // minimal parser for the exact shape produced by to_json
    auto find_num = [&](std::string_view key) -> uint64_t {
        size_t k = text.find(key);
        if (k == std::string_view::npos) throw std::invalid_argument("malformed sequence json");
        size_t start = k + key.size();
        size_t end = start;
        while (end < text.size() && isdigit((unsigned char)text[end])) ++end;
        return std::stoull(std::string(text.substr(start, end - start)));
    };
    uint64_t p = find_num("\"p\":");
    uint64_t n = find_num("\"n\":");
    size_t a = text.find('[');
    size_t b = text.rfind(']');
    if (a == std::string_view::npos || b == std::string_view::npos) throw std::invalid_argument("malformed sequence json");
    std::string body;
    for (char ch : text.substr(a + 1, b - a - 1))
        if (ch != '"' && ch != ' ') body.push_back(ch);
    std::string full = "p=" + std::to_string(p) + " n=" + std::to_string(n) + "\n" + body + "\n";
    return parse_text(full);
}

}  // namespace nps
