#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mrmm {

/// Dense matrix over GF(2); rows bit-packed into 64-bit words (bit c of a
/// row's word block = entry in column c).
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);
    static BitMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool v);

    std::span<const std::uint64_t> row(std::size_t r) const;
    void xor_row_into(std::size_t src, BitMatrix& dst, std::size_t dst_row) const;

    BitMatrix operator*(const BitMatrix& rhs) const;
    BitMatrix operator+(const BitMatrix& rhs) const;
    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

    BitMatrix transposed() const;
    bool is_zero() const noexcept;
    /// Equivalent to det != 0; over GF(2) the determinant is 0 or 1.
    bool nonsingular() const;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> data_;
    std::uint64_t* rp(std::size_t r) { return data_.data() + r * wpr_; }
    const std::uint64_t* rp(std::size_t r) const { return data_.data() + r * wpr_; }
};

}  // namespace mrmm
