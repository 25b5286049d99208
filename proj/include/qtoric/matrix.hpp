#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace qtoric {

/// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            assert(r.size() == cols_);
            for (const auto& x : r) data_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix I(n, n);
        for (std::size_t i = 0; i < n; ++i) I(i, i) = T(1);
        return I;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        Matrix M(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < M.cols_; ++j) M(i, j) = rows[i][j];
        return M;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    void swap_rows(std::size_t i, std::size_t k) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }
    void swap_cols(std::size_t j, std::size_t l) {
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, l));
    }

    Matrix transposed() const {
        Matrix M(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) M(j, i) = (*this)(i, j);
        return M;
    }

    friend Matrix operator*(const Matrix& A, const Matrix& B) {
        assert(A.cols_ == B.rows_);
        Matrix C(A.rows_, B.cols_);
        for (std::size_t i = 0; i < A.rows_; ++i)
            for (std::size_t k = 0; k < A.cols_; ++k) {
                const T& a = A(i, k);
                if (a == T(0)) continue;
                for (std::size_t j = 0; j < B.cols_; ++j) C(i, j) += a * B(k, j);
            }
        return C;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        assert(v.size() == cols_);
        std::vector<T> r(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    friend bool operator==(const Matrix& A, const Matrix& B) {
        return A.rows_ == B.rows_ && A.cols_ == B.cols_ && A.data_ == B.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

/// Reduce M to reduced row echelon form in place; returns the pivot columns.
/// T must be an exact field type (FieldScalar or Rational).
template <class T>
std::vector<std::size_t> rref(Matrix<T>& M) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
        std::size_t p = r;
        while (p < M.rows() && M(p, c) == T(0)) ++p;
        if (p == M.rows()) continue;
        M.swap_rows(r, p);
        T inv = T(1) / M(r, c);
        for (std::size_t j = c; j < M.cols(); ++j) M(r, j) *= inv;
        for (std::size_t i = 0; i < M.rows(); ++i) {
            if (i == r || M(i, c) == T(0)) continue;
            T f = M(i, c);
            for (std::size_t j = c; j < M.cols(); ++j) M(i, j) -= f * M(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class T>
std::size_t rank(Matrix<T> M) {
    return rref(M).size();
}

/// Kernel basis of M from its RREF: one vector per free column, with 1 in the
/// free coordinate. This is the canonical echelon parametrization.
template <class T>
std::vector<std::vector<T>> kernel_basis(Matrix<T> M) {
    std::vector<std::size_t> pivots = rref(M);
    std::vector<bool> is_pivot(M.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t c = 0; c < M.cols(); ++c) {
        if (is_pivot[c]) continue;
        std::vector<T> v(M.cols(), T(0));
        v[c] = T(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -M(r, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solve A x = b exactly; nullopt when inconsistent or underdetermined.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& A, const std::vector<T>& b) {
    assert(b.size() == A.rows());
    Matrix<T> aug(A.rows(), A.cols() + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
        aug(i, A.cols()) = b[i];
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;  // inconsistent
    if (pivots.size() < A.cols()) return std::nullopt;                      // underdetermined
    std::vector<T> x(A.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, A.cols());
    return x;
}

}  // namespace qtoric
