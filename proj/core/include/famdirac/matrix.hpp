#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "famdirac/errors.hpp"
#include "famdirac/laurent.hpp"
#include "famdirac/poly.hpp"
#include "famdirac/scalar.hpp"

namespace famdirac {

/// Dense row-major matrix over a commutative coefficient ring.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows * cols) throw InvalidInput("bad_matrix", "matrix data size mismatch");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw InvalidInput("bad_matrix", "ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[check(i, j)]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[check(i, j)]; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix column(std::size_t j) const { return columns(j, j + 1); }

    /// Columns [first, last).
    Matrix columns(std::size_t first, std::size_t last) const {
        Matrix c(rows_, last - first);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = first; j < last; ++j) c(i, j - first) = (*this)(i, j);
        return c;
    }

    /// Rows [first, last).
    Matrix row_range(std::size_t first, std::size_t last) const {
        Matrix c(last - first, cols_);
        for (std::size_t i = first; i < last; ++i)
            for (std::size_t j = 0; j < cols_; ++j) c(i - first, j) = (*this)(i, j);
        return c;
    }

    /// Horizontal concatenation [a | b].
    friend Matrix hconcat(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) throw InvalidInput("bad_matrix", "hconcat row mismatch");
        Matrix c(a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) c(i, j) = a(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, a.cols_ + j) = b(i, j);
        }
        return c;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    /// row[dst] += f * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const T& f) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += f * (*this)(src, j);
    }
    /// col[dst] += f * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const T& f) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += (*this)(i, src) * f;
    }
    void scale_row(std::size_t r, const T& f) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = f * (*this)(r, j);
    }
    void scale_col(std::size_t c, const T& f) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = (*this)(i, c) * f;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw InvalidInput("bad_matrix", "matrix product dimension mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
            }
        return c;
    }
    friend Matrix operator*(Matrix a, const T& c) {
        for (auto& x : a.data_) x *= c;
        return a;
    }
    friend Matrix operator*(const T& c, Matrix a) { return std::move(a) * c; }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("bad_matrix", "matrix sum dimension mismatch");
        for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("bad_matrix", "matrix sum dimension mismatch");
        for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
        return a;
    }
    friend bool operator==(const Matrix&, const Matrix&) = default;

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
            os << "]";
        }
        os << "]";
        return os.str();
    }

private:
    std::size_t check(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw InvalidInput("bad_matrix", "matrix index out of range");
        return i * cols_ + j;
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using ScalarMatrix = Matrix<Scalar>;
using PolyMatrix = Matrix<Poly>;
using LaurentMatrix = Matrix<Laurent>;

/// Solves a x = b over Q(i) for square invertible a; throws DomainError
/// ("singular_matrix") otherwise.
ScalarMatrix solve(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix inverse(const ScalarMatrix& a);
Scalar determinant(const ScalarMatrix& a);

/// Fraction-free (Bareiss) determinant over K[t].
Poly determinant(const PolyMatrix& a);

/// Entrywise evaluation at t = x.
ScalarMatrix evaluate(const PolyMatrix& m, const Scalar& x);

PolyMatrix to_poly_matrix(const ScalarMatrix& m);
LaurentMatrix localize(const PolyMatrix& m);

}  // namespace famdirac
