#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aqncc {

/// Bit-packed binary vector over GF(2). Unused bits of the last word are zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    /// Parse a string of '0'/'1' characters, most significant position first.
    static BitVector from_string(std::string_view bits);

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t weight() const;
    bool any() const;

    BitVector& operator^=(const BitVector& o);

    std::span<const std::uint64_t> words() const { return w_; }
    std::span<std::uint64_t> words() { return w_; }
    std::string to_string() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

BitVector operator^(BitVector a, const BitVector& b);

/// Dense bit-packed binary matrix, row major. Immutable by convention once
/// built; all public free functions below are pure and never modify inputs,
/// so values can be shared freely across threads.
class BinMatrix {
public:
    BinMatrix() = default;
    BinMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(rows * wpr_, 0) {}

    static BinMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const {
        return (w_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        const std::uint64_t m = std::uint64_t{1} << (c & 63);
        auto& word = w_[r * wpr_ + (c >> 6)];
        if (v) word |= m; else word &= ~m;
    }

    std::span<const std::uint64_t> row_words(std::size_t r) const {
        return {w_.data() + r * wpr_, wpr_};
    }
    BitVector row(std::size_t r) const;
    void assign_row(std::size_t r, const BitVector& v);

    /// Sorted column positions of the ones in row r (sparse traversal).
    std::vector<std::uint32_t> row_support(std::size_t r) const;
    std::vector<std::vector<std::uint32_t>> row_supports() const;
    std::vector<std::vector<std::uint32_t>> col_supports() const;

    std::size_t count_ones() const;

    friend bool operator==(const BinMatrix&, const BinMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Vertical concatenation; column counts must agree.
BinMatrix stack(const BinMatrix& top, const BinMatrix& bottom);

/// Append a single row (used by the rank-based membership identity).
BinMatrix stack_row(const BinMatrix& m, const BitVector& v);

/// Rank over GF(2) by Gaussian elimination on a scratch copy.
std::size_t rank(const BinMatrix& m);

/// a * b^T over GF(2); requires a.cols() == b.cols().
/// Entry (i,j) is the parity of |support(a_i) & support(b_j)|.
BinMatrix mul_transpose(const BinMatrix& a, const BinMatrix& b);

/// True iff v lies in the GF(2) row space of m; requires v.size() == m.cols().
bool in_rowspace(const BitVector& v, const BinMatrix& m);

/// H * e^T over GF(2): one parity bit per row of h.
BitVector syndrome(const BinMatrix& h, const BitVector& e);

/// Row-echelon basis of a matrix, kept for repeated membership queries.
class RowBasis {
public:
    explicit RowBasis(const BinMatrix& m);
    bool contains(const BitVector& v) const;
    std::size_t rank() const { return pivot_cols_.size(); }
    std::size_t cols() const { return cols_; }

private:
    std::size_t cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> rows_;       // echelon rows, packed
    std::vector<std::size_t> pivot_cols_;   // pivot column of each row
};

} // namespace aqncc
