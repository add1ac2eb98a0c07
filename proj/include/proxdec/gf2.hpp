#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace proxdec::gf2 {

/// Dense binary matrix with rows packed into 64-bit words.
class BitMatrix {
  public:
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
          data_(rows * words_per_row_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * words_per_row_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t& w = data_[r * words_per_row_ + c / 64];
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        w = v ? (w | mask) : (w & ~mask);
    }
    void xor_row(std::size_t dst, std::size_t src) {
        std::uint64_t* d = &data_[dst * words_per_row_];
        const std::uint64_t* s = &data_[src * words_per_row_];
        for (std::size_t w = 0; w < words_per_row_; ++w) d[w] ^= s[w];
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::uint64_t* pa = &data_[a * words_per_row_];
        std::uint64_t* pb = &data_[b * words_per_row_];
        for (std::size_t w = 0; w < words_per_row_; ++w) std::swap(pa[w], pb[w]);
    }

  private:
    std::size_t rows_, cols_, words_per_row_;
    std::vector<std::uint64_t> data_;
};

/// Reduces `m` to reduced row echelon form in place. Returns the pivot
/// column of each pivot row, in order; the rank is the returned size.
inline std::vector<std::size_t> rref(BitMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && !m.get(piv, col)) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(row, piv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != row && m.get(r, col)) m.xor_row(r, row);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(BitMatrix m) { return rref(m).size(); }

/// Basis of {v : m v = 0}, one vector per free column of the RREF.
inline std::vector<std::vector<std::uint8_t>> null_space(BitMatrix m) {
    const std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<std::vector<std::uint8_t>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<std::uint8_t> v(m.cols(), 0);
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (m.get(r, free_col)) v[pivots[r]] = 1;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace proxdec::gf2
