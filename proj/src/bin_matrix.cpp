#include "aqncc/bin_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace aqncc {

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const char c = bits[i];
        if (c != '0' && c != '1')
            throw std::invalid_argument("BitVector::from_string: expected only '0'/'1'");
        if (c == '1') v.set(i, true);
    }
    return v;
}

std::size_t BitVector::weight() const {
    std::size_t w = 0;
    for (auto word : w_) w += std::popcount(word);
    return w;
}

bool BitVector::any() const {
    for (auto word : w_)
        if (word) return true;
    return false;
}

BitVector& BitVector::operator^=(const BitVector& o) {
    if (n_ != o.n_)
        throw std::invalid_argument("BitVector::operator^=: length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

BitVector operator^(BitVector a, const BitVector& b) {
    a ^= b;
    return a;
}

std::string BitVector::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BinMatrix BinMatrix::identity(std::size_t n) {
    BinMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitVector BinMatrix::row(std::size_t r) const {
    BitVector v(cols_);
    auto src = row_words(r);
    std::copy(src.begin(), src.end(), v.words().begin());
    return v;
}

void BinMatrix::assign_row(std::size_t r, const BitVector& v) {
    if (v.size() != cols_)
        throw std::invalid_argument("BinMatrix::assign_row: length mismatch");
    std::copy(v.words().begin(), v.words().end(), w_.begin() + r * wpr_);
}

std::vector<std::uint32_t> BinMatrix::row_support(std::size_t r) const {
    std::vector<std::uint32_t> s;
    auto words = row_words(r);
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
        std::uint64_t w = words[wi];
        while (w) {
            const int b = std::countr_zero(w);
            s.push_back(static_cast<std::uint32_t>(wi * 64 + b));
            w &= w - 1;
        }
    }
    return s;
}

std::vector<std::vector<std::uint32_t>> BinMatrix::row_supports() const {
    std::vector<std::vector<std::uint32_t>> all(rows_);
    for (std::size_t r = 0; r < rows_; ++r) all[r] = row_support(r);
    return all;
}

std::vector<std::vector<std::uint32_t>> BinMatrix::col_supports() const {
    std::vector<std::vector<std::uint32_t>> cols(cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (auto c : row_support(r)) cols[c].push_back(static_cast<std::uint32_t>(r));
    return cols;
}

std::size_t BinMatrix::count_ones() const {
    std::size_t n = 0;
    for (auto w : w_) n += std::popcount(w);
    return n;
}

BinMatrix stack(const BinMatrix& top, const BinMatrix& bottom) {
    if (top.cols() != bottom.cols() && top.rows() != 0 && bottom.rows() != 0)
        throw std::invalid_argument("stack: column count mismatch");
    const std::size_t cols = top.rows() ? top.cols() : bottom.cols();
    BinMatrix out(top.rows() + bottom.rows(), cols);
    for (std::size_t r = 0; r < top.rows(); ++r) out.assign_row(r, top.row(r));
    for (std::size_t r = 0; r < bottom.rows(); ++r)
        out.assign_row(top.rows() + r, bottom.row(r));
    return out;
}

BinMatrix stack_row(const BinMatrix& m, const BitVector& v) {
    if (v.size() != m.cols())
        throw std::invalid_argument("stack_row: length mismatch");
    BinMatrix out(m.rows() + 1, m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) out.assign_row(r, m.row(r));
    out.assign_row(m.rows(), v);
    return out;
}

namespace {

// Elimination kernel shared by rank() and RowBasis. Rows are packed in
// `data` with `wpr` words per row; reduces in place, returns pivot columns.
std::vector<std::size_t> echelonize(std::vector<std::uint64_t>& data,
                                    std::size_t rows, std::size_t cols,
                                    std::size_t wpr) {
    std::vector<std::size_t> pivots;
    std::size_t rk = 0;
    for (std::size_t col = 0; col < cols && rk < rows; ++col) {
        const std::size_t wi = col >> 6;
        const std::uint64_t mask = std::uint64_t{1} << (col & 63);
        std::size_t pivot = rows;
        for (std::size_t r = rk; r < rows; ++r) {
            if (data[r * wpr + wi] & mask) { pivot = r; break; }
        }
        if (pivot == rows) continue;
        if (pivot != rk)
            std::swap_ranges(data.begin() + pivot * wpr,
                             data.begin() + (pivot + 1) * wpr,
                             data.begin() + rk * wpr);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r != rk && (data[r * wpr + wi] & mask)) {
                for (std::size_t w = 0; w < wpr; ++w)
                    data[r * wpr + w] ^= data[rk * wpr + w];
            }
        }
        pivots.push_back(col);
        ++rk;
    }
    return pivots;
}

} // namespace

std::size_t rank(const BinMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    std::vector<std::uint64_t> scratch;
    scratch.reserve(m.rows() * m.words_per_row());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto words = m.row_words(r);
        scratch.insert(scratch.end(), words.begin(), words.end());
    }
    return echelonize(scratch, m.rows(), m.cols(), m.words_per_row()).size();
}

BinMatrix mul_transpose(const BinMatrix& a, const BinMatrix& b) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("mul_transpose: inner dimension mismatch");
    BinMatrix out(a.rows(), b.rows());
    const std::size_t wpr = a.words_per_row();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto ra = a.row_words(i);
        for (std::size_t j = 0; j < b.rows(); ++j) {
            auto rb = b.row_words(j);
            std::size_t acc = 0;
            for (std::size_t w = 0; w < wpr; ++w) acc += std::popcount(ra[w] & rb[w]);
            if (acc & 1) out.set(i, j, true);
        }
    }
    return out;
}

RowBasis::RowBasis(const BinMatrix& m) : cols_(m.cols()), wpr_(m.words_per_row()) {
    std::vector<std::uint64_t> data;
    data.reserve(m.rows() * wpr_);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto words = m.row_words(r);
        data.insert(data.end(), words.begin(), words.end());
    }
    pivot_cols_ = echelonize(data, m.rows(), cols_, wpr_);
    rows_.assign(data.begin(), data.begin() + pivot_cols_.size() * wpr_);
}

bool RowBasis::contains(const BitVector& v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("RowBasis::contains: length mismatch");
    std::vector<std::uint64_t> x(v.words().begin(), v.words().end());
    for (std::size_t r = 0; r < pivot_cols_.size(); ++r) {
        const std::size_t col = pivot_cols_[r];
        if (x[col >> 6] & (std::uint64_t{1} << (col & 63))) {
            for (std::size_t w = 0; w < wpr_; ++w) x[w] ^= rows_[r * wpr_ + w];
        }
    }
    for (auto w : x)
        if (w) return false;
    return true;
}

bool in_rowspace(const BitVector& v, const BinMatrix& m) {
    if (v.size() != m.cols())
        throw std::invalid_argument("in_rowspace: length mismatch");
    return RowBasis(m).contains(v);
}

BitVector syndrome(const BinMatrix& h, const BitVector& e) {
    if (e.size() != h.cols())
        throw std::invalid_argument("syndrome: length mismatch");
    BitVector s(h.rows());
    auto ew = e.words();
    for (std::size_t r = 0; r < h.rows(); ++r) {
        auto rw = h.row_words(r);
        std::size_t acc = 0;
        for (std::size_t w = 0; w < rw.size(); ++w) acc += std::popcount(rw[w] & ew[w]);
        if (acc & 1) s.set(r, true);
    }
    return s;
}

} // namespace aqncc
