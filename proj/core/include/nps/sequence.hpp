#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nps/cyclotomic.hpp"

namespace nps {

/// One sequence entry: either the zero symbol or a root of unity zeta_p^e.
/// Zero orders before every root; roots order by exponent.
class Symbol {
public:
    static Symbol zero() { return Symbol(-1); }
    static Symbol root(uint32_t e) { return Symbol(int32_t(e)); }

    bool is_zero() const { return e_ < 0; }
    uint32_t exponent() const { return uint32_t(e_); }

    auto operator<=>(const Symbol&) const = default;

private:
    explicit Symbol(int32_t e) : e_(e) {}
    int32_t e_;
};

/// Period-n sequence over {0} U {zeta_p^e}. The period is symbols.size();
/// mode is p-ary when zero_count() == 0 and "almost p-ary with s zero
/// symbols" when zero_count() == s >= 1.
struct Sequence {
    uint32_t p = 0;
    std::vector<Symbol> symbols;

    uint32_t period() const { return uint32_t(symbols.size()); }
    uint32_t zero_count() const;
    uint32_t nonzero_count() const { return period() - zero_count(); }
    bool is_pary() const { return zero_count() == 0; }

    Sequence shifted(uint32_t k) const;          // a_i -> a_{i+k}
    Sequence scaled(uint32_t c) const;           // multiply entries by zeta_p^c

    bool operator==(const Sequence&) const = default;

    /// Two lines: "p=<p> n=<n>" then comma-separated "0" / "z^e" tokens.
    std::string to_text() const;
    static Sequence parse_text(std::string_view text);

    std::string to_json() const;
    static Sequence from_json(std::string_view text);
};

struct AutocorrProfile {
    std::vector<CycInt> values;  // index t = 0 .. period-1
};

/// C(t) = sum_i a_i * conj(a_{i+t mod n}); zero symbols contribute nothing.
AutocorrProfile autocorrelation(const Sequence& seq);

/// True iff every out-of-phase coefficient C(t), t = 1..n-1, equals gamma.
bool is_nps(const Sequence& seq, int64_t gamma);

/// Lexicographically minimal representative of the orbit of seq under cyclic
/// shifts and global multiplication by powers of zeta_p.
Sequence canonicalize(const Sequence& seq);

}  // namespace nps
