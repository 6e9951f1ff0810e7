#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mrmm/bigint.hpp"

namespace mrmm {

/// Polynomial over GF(2), bit-packed: bit i holds the coefficient of X^i.
/// Stored normalized (no trailing zero words); the zero polynomial is the
/// empty word vector and its degree is "none" rather than a sentinel.
class PolyF2 {
public:
    PolyF2() = default;

    static PolyF2 zero() { return {}; }
    static PolyF2 one() { return from_bits(1); }
    static PolyF2 x() { return from_bits(2); }
    static PolyF2 monomial(std::size_t degree);
    static PolyF2 from_bits(std::uint64_t bits);
    static PolyF2 from_words(std::vector<std::uint64_t> words);
    static PolyF2 from_hex(std::string_view text);

    bool is_zero() const noexcept { return w_.empty(); }
    bool is_one() const noexcept { return w_.size() == 1 && w_[0] == 1; }
    std::optional<std::size_t> degree() const noexcept;
    bool coeff(std::size_t i) const noexcept;
    void set_coeff(std::size_t i, bool value);
    std::size_t weight() const noexcept;
    std::uint64_t low_bits() const noexcept { return w_.empty() ? 0 : w_[0]; }
    std::span<const std::uint64_t> words() const noexcept { return w_; }
    std::string to_hex() const;

    /// Coefficient slice [lo, lo+len) repacked from bit 0. len <= 64.
    std::uint64_t extract_bits(std::size_t lo, std::size_t len) const;

    PolyF2& operator+=(const PolyF2& rhs);
    friend PolyF2 operator+(PolyF2 a, const PolyF2& b) {
        a += b;
        return a;
    }
    friend PolyF2 operator*(const PolyF2& a, const PolyF2& b);
    friend bool operator==(const PolyF2&, const PolyF2&) = default;

    /// This * X^k.
    PolyF2 shifted(std::size_t k) const;
    /// This += b * X^k.
    void xor_shifted(const PolyF2& b, std::size_t k);

private:
    std::vector<std::uint64_t> w_;
    void normalize();
};

struct DivMod {
    PolyF2 quotient;
    PolyF2 remainder;
};

DivMod poly_divmod(const PolyF2& a, const PolyF2& b);
PolyF2 poly_mod(const PolyF2& a, const PolyF2& f);

PolyF2 poly_mul_mod(const PolyF2& a, const PolyF2& b, const PolyF2& f);
PolyF2 poly_pow_mod(const PolyF2& base, const BigUint& exponent, const PolyF2& f);
PolyF2 poly_gcd(PolyF2 a, PolyF2 b);

/// Coefficient-reversed polynomial X^deg * p(1/X); zero maps to zero.
PolyF2 poly_reciprocal(const PolyF2& p);

}  // namespace mrmm
