#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace stcm {

using cplx = std::complex<double>;

/// Dense complex matrix, column-major so channel-state vectors are contiguous.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int r, int c) { return data_[idx(r, c)]; }
    const cplx& operator()(int r, int c) const { return data_[idx(r, c)]; }

    std::span<cplx> col(int c) { return {data_.data() + idx(0, c), static_cast<std::size_t>(rows_)}; }
    std::span<const cplx> col(int c) const {
        return {data_.data() + idx(0, c), static_cast<std::size_t>(rows_)};
    }

    std::span<const cplx> data() const { return data_; }

    friend bool operator==(const CMatrix& a, const CMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(c) * rows_ + r;
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> data_;
};

/// Ordered bit sequence, MSB first. Blocks never exceed 32 bits for the
/// supported scheme sizes, so a packed value representation is also provided.
struct BitBlock {
    std::vector<std::uint8_t> bits;

    BitBlock() = default;
    explicit BitBlock(std::vector<std::uint8_t> b) : bits(std::move(b)) {}

    static BitBlock from_value(std::uint32_t value, int length) {
        BitBlock b;
        b.bits.resize(length);
        for (int i = 0; i < length; ++i)
            b.bits[i] = static_cast<std::uint8_t>((value >> (length - 1 - i)) & 1u);
        return b;
    }

    std::uint32_t value() const {
        std::uint32_t v = 0;
        for (std::uint8_t bit : bits) v = (v << 1) | (bit & 1u);
        return v;
    }

    int length() const { return static_cast<int>(bits.size()); }

    friend bool operator==(const BitBlock&, const BitBlock&) = default;
};

} // namespace stcm
