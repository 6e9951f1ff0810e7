#include "mrmm/poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "mrmm/error.hpp"

namespace mrmm {

namespace {
constexpr std::size_t kWordBits = 64;
}

void PolyF2::normalize() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

PolyF2 PolyF2::monomial(std::size_t degree) {
    PolyF2 p;
    p.w_.assign(degree / kWordBits + 1, 0);
    p.w_.back() = std::uint64_t{1} << (degree % kWordBits);
    return p;
}

PolyF2 PolyF2::from_bits(std::uint64_t bits) {
    PolyF2 p;
    if (bits) p.w_.push_back(bits);
    return p;
}

PolyF2 PolyF2::from_words(std::vector<std::uint64_t> words) {
    PolyF2 p;
    p.w_ = std::move(words);
    p.normalize();
    return p;
}

PolyF2 PolyF2::from_hex(std::string_view text) {
    std::string_view digits = text;
    if (digits.size() >= 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X'))
        digits.remove_prefix(2);
    if (digits.empty()) throw InvalidInput("empty hex polynomial");
    PolyF2 p;
    p.w_.assign(digits.size() / 16 + 1, 0);
    std::size_t bit = 0;  // position of the *next* nibble, counted from the low end
    for (std::size_t i = digits.size(); i-- > 0;) {
        char c = digits[i];
        std::uint64_t v;
        if (c >= '0' && c <= '9')
            v = static_cast<std::uint64_t>(c - '0');
        else if (c >= 'a' && c <= 'f')
            v = static_cast<std::uint64_t>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F')
            v = static_cast<std::uint64_t>(c - 'A' + 10);
        else
            throw InvalidInput("bad hex digit in polynomial: '" + std::string(1, c) + "'");
        p.w_[bit / kWordBits] |= v << (bit % kWordBits);
        bit += 4;  // nibbles never straddle a 64-bit word boundary
    }
    p.normalize();
    return p;
}

std::optional<std::size_t> PolyF2::degree() const noexcept {
    if (w_.empty()) return std::nullopt;
    return (w_.size() - 1) * kWordBits + (kWordBits - 1 - std::countl_zero(w_.back()));
}

bool PolyF2::coeff(std::size_t i) const noexcept {
    std::size_t word = i / kWordBits;
    if (word >= w_.size()) return false;
    return (w_[word] >> (i % kWordBits)) & 1;
}

void PolyF2::set_coeff(std::size_t i, bool value) {
    std::size_t word = i / kWordBits;
    if (value) {
        if (word >= w_.size()) w_.resize(word + 1, 0);
        w_[word] |= std::uint64_t{1} << (i % kWordBits);
    } else {
        if (word < w_.size()) {
            w_[word] &= ~(std::uint64_t{1} << (i % kWordBits));
            normalize();
        }
    }
}

std::size_t PolyF2::weight() const noexcept {
    std::size_t n = 0;
    for (std::uint64_t w : w_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::string PolyF2::to_hex() const {
    if (w_.empty()) return "0x0";
    std::string out = "0x";
    static const char* digits = "0123456789ABCDEF";
    bool started = false;
    for (std::size_t i = w_.size(); i-- > 0;) {
        for (int shift = 60; shift >= 0; shift -= 4) {
            unsigned nib = static_cast<unsigned>((w_[i] >> shift) & 0xF);
            if (!started && nib == 0) continue;
            started = true;
            out.push_back(digits[nib]);
        }
    }
    return out;
}

std::uint64_t PolyF2::extract_bits(std::size_t lo, std::size_t len) const {
    if (len == 0) return 0;
    if (len > 64) throw InvalidInput("extract_bits: len > 64");
    std::size_t word = lo / kWordBits;
    std::size_t off = lo % kWordBits;
    std::uint64_t out = word < w_.size() ? w_[word] >> off : 0;
    if (off != 0 && word + 1 < w_.size()) out |= w_[word + 1] << (kWordBits - off);
    if (len < 64) out &= (std::uint64_t{1} << len) - 1;
    return out;
}

PolyF2& PolyF2::operator+=(const PolyF2& rhs) {
    if (rhs.w_.size() > w_.size()) w_.resize(rhs.w_.size(), 0);
    for (std::size_t i = 0; i < rhs.w_.size(); ++i) w_[i] ^= rhs.w_[i];
    normalize();
    return *this;
}

PolyF2 PolyF2::shifted(std::size_t k) const {
    if (w_.empty() || k == 0) {
        PolyF2 p = *this;
        return p;
    }
    PolyF2 p;
    std::size_t words = k / kWordBits;
    std::size_t bits = k % kWordBits;
    p.w_.assign(w_.size() + words + 1, 0);
    for (std::size_t i = 0; i < w_.size(); ++i) {
        p.w_[i + words] |= bits ? (w_[i] << bits) : w_[i];
        if (bits) p.w_[i + words + 1] |= w_[i] >> (kWordBits - bits);
    }
    p.normalize();
    return p;
}

void PolyF2::xor_shifted(const PolyF2& b, std::size_t k) {
    if (b.w_.empty()) return;
    std::size_t words = k / kWordBits;
    std::size_t bits = k % kWordBits;
    std::size_t need = b.w_.size() + words + 1;
    if (w_.size() < need) w_.resize(need, 0);
    for (std::size_t i = 0; i < b.w_.size(); ++i) {
        w_[i + words] ^= bits ? (b.w_[i] << bits) : b.w_[i];
        if (bits) w_[i + words + 1] ^= b.w_[i] >> (kWordBits - bits);
    }
    normalize();
}

PolyF2 operator*(const PolyF2& a, const PolyF2& b) {
    if (a.is_zero() || b.is_zero()) return PolyF2::zero();
    // Schoolbook, word-sliced: for each set bit of a, xor in a shifted copy of b.
    PolyF2 out;
    out.w_.assign(a.w_.size() + b.w_.size(), 0);
    for (std::size_t wi = 0; wi < a.w_.size(); ++wi) {
        std::uint64_t word = a.w_[wi];
        while (word) {
            int bit = std::countr_zero(word);
            word &= word - 1;
            std::size_t shift = wi * 64 + static_cast<std::size_t>(bit);
            std::size_t wofs = shift / 64, bofs = shift % 64;
            for (std::size_t j = 0; j < b.w_.size(); ++j) {
                out.w_[j + wofs] ^= bofs ? (b.w_[j] << bofs) : b.w_[j];
                if (bofs) out.w_[j + wofs + 1] ^= b.w_[j] >> (64 - bofs);
            }
        }
    }
    out.normalize();
    return out;
}

DivMod poly_divmod(const PolyF2& a, const PolyF2& b) {
    auto db = b.degree();
    if (!db) throw InvalidInput("polynomial division by zero");
    DivMod result;
    result.remainder = a;
    auto dr = result.remainder.degree();
    while (dr && *dr >= *db) {
        std::size_t shift = *dr - *db;
        result.quotient.set_coeff(shift, true);
        result.remainder.xor_shifted(b, shift);
        dr = result.remainder.degree();
    }
    return result;
}

PolyF2 poly_mod(const PolyF2& a, const PolyF2& f) {
    auto df = f.degree();
    if (!df) throw InvalidInput("polynomial reduction by zero");
    PolyF2 r = a;
    auto dr = r.degree();
    while (dr && *dr >= *df) {
        r.xor_shifted(f, *dr - *df);
        dr = r.degree();
    }
    return r;
}

PolyF2 poly_mul_mod(const PolyF2& a, const PolyF2& b, const PolyF2& f) {
    auto df = f.degree();
    if (!df || *df < 1) throw InvalidInput("modulus must have degree >= 1");
    return poly_mod(poly_mod(a, f) * poly_mod(b, f), f);
}

PolyF2 poly_pow_mod(const PolyF2& base, const BigUint& exponent, const PolyF2& f) {
    auto df = f.degree();
    if (!df || *df < 1) throw InvalidInput("modulus must have degree >= 1");
    if (exponent < 0) throw InvalidInput("negative exponent");
    PolyF2 result = poly_mod(PolyF2::one(), f);
    PolyF2 sq = poly_mod(base, f);
    BigUint e = exponent;
    while (e != 0) {
        if ((e & 1) != 0) result = poly_mod(result * sq, f);
        e >>= 1;
        if (e != 0) sq = poly_mod(sq * sq, f);
    }
    return result;
}

PolyF2 poly_gcd(PolyF2 a, PolyF2 b) {
    if (a.is_zero() && b.is_zero()) throw InvalidInput("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        PolyF2 r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

PolyF2 poly_reciprocal(const PolyF2& p) {
    auto d = p.degree();
    if (!d) return PolyF2::zero();
    PolyF2 out;
    for (std::size_t i = 0; i <= *d; ++i)
        if (p.coeff(i)) out.set_coeff(*d - i, true);
    return out;
}

}  // namespace mrmm
