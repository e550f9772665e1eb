#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "vancoh/rational.hpp"

namespace vancoh {

// Dense row-major matrix over Q.  Sizes here stay at desk scale, so plain
// Gaussian elimination with the first nonzero pivot is all we need; there
// is no tolerance because the arithmetic is exact.
class RatMatrix {
  public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
    RatMatrix(size_t rows, size_t cols, std::vector<Rat> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows_ * cols_)
            throw std::invalid_argument("RatMatrix: entries length must be rows*cols");
    }

    static RatMatrix identity(size_t k) {
        RatMatrix m(k, k);
        for (size_t i = 0; i < k; ++i) m.at(i, i) = 1;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rat& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const RatMatrix& other) const = default;

    RatMatrix transpose() const {
        RatMatrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        RatMatrix c(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k) == 0) continue;
                for (size_t j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return c;
    }

  private:
    size_t rows_, cols_;
    std::vector<Rat> a_;
};

namespace detail {

// Reduced row echelon form in place; returns pivot column indices.
inline std::vector<size_t> rref(RatMatrix& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t p = row;
        while (p < m.rows() && m.at(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        const Rat inv = Rat(1) / m.at(row, col);
        for (size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            const Rat f = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

inline size_t rank(const RatMatrix& m) {
    RatMatrix work = m;
    return detail::rref(work).size();
}

// Basis of the kernel, one vector per free column in increasing column
// order (the standard RREF free-variable basis, so the result is
// deterministic).
inline std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m) {
    RatMatrix work = m;
    const auto pivots = detail::rref(work);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(m.cols(), Rat(0));
        v[free_col] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Whether v lies in the span of the columns of a.
inline bool in_column_span(const RatMatrix& a, const std::vector<Rat>& v) {
    if (v.size() != a.rows()) throw std::invalid_argument("in_column_span: length mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = v[i];
    }
    return rank(aug) == rank(a);
}

inline std::vector<Rat> apply_matrix(const RatMatrix& a, const std::vector<Rat>& v) {
    if (v.size() != a.cols()) throw std::invalid_argument("apply: length mismatch");
    std::vector<Rat> out(a.rows(), Rat(0));
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0) out[i] += a.at(i, j) * v[j];
    return out;
}

}  // namespace vancoh
