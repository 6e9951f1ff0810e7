#include "mrmm/bitmatrix.hpp"

#include <algorithm>
#include <bit>

#include "mrmm/error.hpp"

namespace mrmm {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw InvalidInput("matrix index out of range");
    return (rp(r)[c / 64] >> (c % 64)) & 1;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
    if (r >= rows_ || c >= cols_) throw InvalidInput("matrix index out of range");
    if (v)
        rp(r)[c / 64] |= std::uint64_t{1} << (c % 64);
    else
        rp(r)[c / 64] &= ~(std::uint64_t{1} << (c % 64));
}

std::span<const std::uint64_t> BitMatrix::row(std::size_t r) const {
    if (r >= rows_) throw InvalidInput("matrix row out of range");
    return {rp(r), wpr_};
}

void BitMatrix::xor_row_into(std::size_t src, BitMatrix& dst, std::size_t dst_row) const {
    if (src >= rows_ || dst_row >= dst.rows_ || wpr_ != dst.wpr_)
        throw InvalidInput("row xor shape mismatch");
    const std::uint64_t* s = rp(src);
    std::uint64_t* d = dst.rp(dst_row);
    for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw InvalidInput("matrix product shape mismatch");
    BitMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const std::uint64_t* a = rp(r);
        std::uint64_t* o = out.rp(r);
        for (std::size_t w = 0; w < wpr_; ++w) {
            std::uint64_t bits = a[w];
            while (bits) {
                std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                const std::uint64_t* b = rhs.rp(k);
                for (std::size_t i = 0; i < rhs.wpr_; ++i) o[i] ^= b[i];
            }
        }
    }
    return out;
}

BitMatrix BitMatrix::operator+(const BitMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidInput("matrix sum shape mismatch");
    BitMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] ^= rhs.data_[i];
    return out;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const std::uint64_t* a = rp(r);
        for (std::size_t w = 0; w < wpr_; ++w) {
            std::uint64_t bits = a[w];
            while (bits) {
                std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                out.set(c, r, true);
            }
        }
    }
    return out;
}

bool BitMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

bool BitMatrix::nonsingular() const {
    if (rows_ != cols_) return false;
    BitMatrix work = *this;
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && !work.get(pivot, col)) ++pivot;
        if (pivot == rows_) return false;
        if (pivot != col)
            for (std::size_t w = 0; w < wpr_; ++w)
                std::swap(work.rp(pivot)[w], work.rp(col)[w]);
        for (std::size_t r = col + 1; r < rows_; ++r)
            if (work.get(r, col))
                for (std::size_t w = 0; w < wpr_; ++w) work.rp(r)[w] ^= work.rp(col)[w];
    }
    return true;
}

}  // namespace mrmm
