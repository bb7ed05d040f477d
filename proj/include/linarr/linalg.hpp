#pragma once

// Dense exact linear algebra over Q(w).

#include <cstddef>
#include <utility>
#include <vector>

#include "linarr/eisenstein.hpp"

namespace linarr {

using Vector = std::vector<Eisenstein>;

/// Row-major dense matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw DomainError("ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Eisenstein& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Eisenstein& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Eisenstein> data_;
};

/// Reduced row echelon form together with the pivot columns.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;

    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan elimination; the first nonzero entry of each column is taken as pivot.
inline Echelon row_reduce(Matrix m) {
    Echelon out;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t found = pivot_row;
        while (found < m.rows() && m(found, col).is_zero()) ++found;
        if (found == m.rows()) continue;
        m.swap_rows(found, pivot_row);
        Eisenstein inv = m(pivot_row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row || m(i, col).is_zero()) continue;
            Eisenstein factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                if (!m(pivot_row, j).is_zero()) m(i, j) -= factor * m(pivot_row, j);
            }
        }
        out.pivots.push_back(col);
        ++pivot_row;
    }
    out.reduced = std::move(m);
    return out;
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

/// Basis of { v : m v = 0 }.
inline std::vector<Vector> null_space(const Matrix& m) {
    Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DomainError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    Echelon e = row_reduce(std::move(aug));
    if (e.rank() < n || e.pivots[n - 1] != n - 1) throw DomainError("singular matrix");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

inline Eisenstein determinant3(const Matrix& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

/// Reduces `v` modulo the row space of an echelon form: the result has zeros in every
/// pivot column, which makes it a canonical coset representative.
inline Vector reduce_modulo(Vector v, const Echelon& basis) {
    for (std::size_t r = 0; r < basis.pivots.size(); ++r) {
        std::size_t p = basis.pivots[r];
        if (v[p].is_zero()) continue;
        Eisenstein factor = v[p];
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (!basis.reduced(r, j).is_zero()) v[j] -= factor * basis.reduced(r, j);
        }
    }
    return v;
}

inline bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace linarr
