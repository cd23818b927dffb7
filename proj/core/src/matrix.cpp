#include "famdirac/matrix.hpp"

namespace famdirac {

namespace {

/// Gauss-Jordan on [a | b]; returns the solution block or throws.
ScalarMatrix gauss_jordan(ScalarMatrix a, ScalarMatrix b, Scalar* det_out) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.rows() != n) throw InvalidInput("bad_matrix", "solve requires a square system");
    Scalar det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k).is_zero()) ++p;
        if (p == n) {
            if (det_out) {
                *det_out = Scalar();
                return {};
            }
            throw DomainError("singular_matrix", "matrix is singular");
        }
        if (p != k) {
            a.swap_rows(p, k);
            b.swap_rows(p, k);
            det = -det;
        }
        Scalar piv = a(k, k);
        det *= piv;
        Scalar inv = piv.inverse();
        a.scale_row(k, inv);
        b.scale_row(k, inv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k).is_zero()) continue;
            Scalar f = -a(i, k);
            a.add_row_multiple(i, k, f);
            b.add_row_multiple(i, k, f);
        }
    }
    if (det_out) *det_out = det;
    return b;
}

}  // namespace

ScalarMatrix solve(const ScalarMatrix& a, const ScalarMatrix& b) { return gauss_jordan(a, b, nullptr); }

ScalarMatrix inverse(const ScalarMatrix& a) { return gauss_jordan(a, ScalarMatrix::identity(a.rows()), nullptr); }

Scalar determinant(const ScalarMatrix& a) {
    Scalar det;
    gauss_jordan(a, ScalarMatrix(a.rows(), 0), &det);
    return det;
}

Poly determinant(const PolyMatrix& input) {
    const std::size_t n = input.rows();
    if (input.cols() != n) throw InvalidInput("bad_matrix", "determinant of non-square matrix");
    if (n == 0) return Poly(1);
    PolyMatrix a = input;
    Poly prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a(p, k).is_zero()) ++p;
            if (p == n) return Poly();
            a.swap_rows(p, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = exact_div(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
            }
        }
        prev = a(k, k);
    }
    Poly d = a(n - 1, n - 1);
    return negate ? -d : d;
}

ScalarMatrix evaluate(const PolyMatrix& m, const Scalar& x) {
    ScalarMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).eval(x);
    return out;
}

PolyMatrix to_poly_matrix(const ScalarMatrix& m) {
    PolyMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Poly(m(i, j));
    return out;
}

LaurentMatrix localize(const PolyMatrix& m) {
    LaurentMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Laurent(m(i, j));
    return out;
}

}  // namespace famdirac
