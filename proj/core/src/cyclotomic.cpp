#include "nps/cyclotomic.hpp"

#include <stdexcept>

#include "nps/numtheory.hpp"

namespace nps {

namespace {

void require_prime(uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("CycInt modulus must be prime, got " + std::to_string(p));
}

}  // namespace

CycInt::CycInt(uint32_t p) : p_(p), c_(p, 0) { require_prime(p); }

CycInt CycInt::integer(uint32_t p, int128 k) {
    CycInt x(p);
    x.c_[0] = k;
    return x;
}

CycInt CycInt::from_exponent(uint32_t p, uint32_t e) {
    if (e >= p) throw std::invalid_argument("root exponent out of range");
    CycInt x(p);
    x.c_[e] = 1;
    x.canonicalize();
    return x;
}

CycInt CycInt::from_coeffs(uint32_t p, std::vector<int128> coeffs) {
    if (coeffs.size() != p) throw std::invalid_argument("coefficient vector must have length p");
    CycInt x(p);
    x.c_ = std::move(coeffs);
    x.canonicalize();
    return x;
}

void CycInt::canonicalize() {
    int128 last = c_[p_ - 1];
    if (last == 0) return;
    for (auto& v : c_) v = checked_sub(v, last);
}

void CycInt::check_same(const CycInt& o) const {
    if (p_ != o.p_) throw std::invalid_argument("CycInt modulus mismatch");
}

bool CycInt::is_zero() const {
    for (auto v : c_)
        if (v != 0) return false;
    return true;
}

std::optional<int128> CycInt::as_integer() const {
    for (uint32_t i = 1; i < p_; ++i)
        if (c_[i] != 0) return std::nullopt;
    return c_[0];
}

CycInt CycInt::conj() const {
    CycInt r(p_);
    for (uint32_t e = 0; e < p_; ++e) r.c_[(p_ - e) % p_] = c_[e];
    r.canonicalize();
    return r;
}

CycInt CycInt::operator+(const CycInt& o) const {
    check_same(o);
    CycInt r(p_);
    for (uint32_t i = 0; i < p_; ++i) r.c_[i] = checked_add(c_[i], o.c_[i]);
    r.canonicalize();
    return r;
}

CycInt CycInt::operator-(const CycInt& o) const {
    check_same(o);
    CycInt r(p_);
    for (uint32_t i = 0; i < p_; ++i) r.c_[i] = checked_sub(c_[i], o.c_[i]);
    r.canonicalize();
    return r;
}

CycInt CycInt::operator-() const {
    CycInt r(p_);
    for (uint32_t i = 0; i < p_; ++i) r.c_[i] = checked_sub(0, c_[i]);
    return r;  // already canonical: last coord stays 0
}

CycInt CycInt::operator*(const CycInt& o) const {
    check_same(o);
    CycInt r(p_);
    for (uint32_t i = 0; i < p_; ++i) {
        if (c_[i] == 0) continue;
        for (uint32_t j = 0; j < p_; ++j) {
            if (o.c_[j] == 0) continue;
            uint32_t k = i + j >= p_ ? i + j - p_ : i + j;
            r.c_[k] = checked_add(r.c_[k], checked_mul(c_[i], o.c_[j]));
        }
    }
    r.canonicalize();
    return r;
}

std::string CycInt::render() const {
    std::string out;
    for (uint32_t e = 0; e < p_; ++e) {
        if (e > 0) out += " + ";
        out += to_string(c_[e]);
        if (e == 1) out += "*z";
        if (e >= 2) out += "*z^" + std::to_string(e);
    }
    return out;
}

CycInt CycInt::parse(std::string_view text) {
    std::vector<int128> coeffs;
    size_t pos = 0;
    uint32_t e = 0;
    while (pos < text.size()) {
        size_t next = text.find(" + ", pos);
        std::string_view term = text.substr(pos, next == std::string_view::npos ? next : next - pos);
        std::string_view num = term;
        if (size_t star = term.find('*'); star != std::string_view::npos) {
            num = term.substr(0, star);
            std::string_view suffix = term.substr(star + 1);
            std::string want = e == 1 ? "z" : "z^" + std::to_string(e);
            if (suffix != want) throw std::invalid_argument("malformed CycInt text");
        } else if (e != 0) {
            throw std::invalid_argument("malformed CycInt text");
        }
        coeffs.push_back(parse_int128(num));
        ++e;
        if (next == std::string_view::npos) break;
        pos = next + 3;
    }
    if (coeffs.size() < 2) throw std::invalid_argument("malformed CycInt text");
    uint32_t p = uint32_t(coeffs.size());
    return from_coeffs(p, std::move(coeffs));
}

std::string CycInt::to_json() const {
    std::string out = "[";
    for (uint32_t e = 0; e < p_; ++e) {
        if (e > 0) out += ",";
        out += to_string(c_[e]);
    }
    out += "]";
    return out;
}

CycInt CycInt::from_json(std::string_view text) {
    size_t a = text.find('[');
    size_t b = text.rfind(']');
    if (a == std::string_view::npos || b == std::string_view::npos || b <= a)
        throw std::invalid_argument("malformed CycInt json");
    std::string_view body = text.substr(a + 1, b - a - 1);
    std::vector<int128> coeffs;
    size_t pos = 0;
    while (pos <= body.size()) {
        size_t next = body.find(',', pos);
        std::string_view tok = body.substr(pos, next == std::string_view::npos ? next : next - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        coeffs.push_back(parse_int128(tok));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    uint32_t p = uint32_t(coeffs.size());
    return from_coeffs(p, std::move(coeffs));
}

}  // namespace nps
