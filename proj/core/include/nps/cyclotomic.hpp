#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nps/int128.hpp"

namespace nps {

/// Exact element of Z[zeta_p] for prime p, stored as a length-p integer
/// coefficient vector over the redundant basis 1, z, ..., z^{p-1}.
///
/// Canonical form: coeffs[p-1] == 0, enforced by subtracting coeffs[p-1]
/// from every coordinate (1 + z + ... + z^{p-1} = 0). Two values are equal
/// iff they share p and identical canonical coefficients. All arithmetic is
/// exact; coefficient overflow beyond 128 bits throws.
class CycInt {
public:
    // zero element of Z[zeta_p]
    explicit CycInt(uint32_t p);

    static CycInt integer(uint32_t p, int128 k);
    static CycInt from_exponent(uint32_t p, uint32_t e);
    // accepts any length-p coefficient vector, canonicalizes
    static CycInt from_coeffs(uint32_t p, std::vector<int128> coeffs);

    uint32_t modulus() const { return p_; }
    const std::vector<int128>& coeffs() const { return c_; }

    bool is_zero() const;
    /// k iff the canonical coefficients are (k, 0, ..., 0).
    std::optional<int128> as_integer() const;

    /// Image under z -> z^{-1} (complex conjugation).
    CycInt conj() const;

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt& o) const;
    bool operator==(const CycInt& o) const = default;

    /// "c0 + c1*z + c2*z^2 + ..." with all p coefficients; exact round-trip.
    std::string render() const;
    static CycInt parse(std::string_view text);

    /// Compact JSON array form "[c0,c1,...]"; p is the array length.
    std::string to_json() const;
    static CycInt from_json(std::string_view text);

private:
    void canonicalize();
    void check_same(const CycInt& o) const;

    uint32_t p_;
    std::vector<int128> c_;
};

}  // namespace nps
