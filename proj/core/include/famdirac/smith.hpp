#pragma once

#include <optional>
#include <vector>

#include "famdirac/matrix.hpp"

namespace famdirac {

/// Smith normal form u * m * v = s over K[t].
struct SnfResult {
    PolyMatrix u;  ///< rows x rows, unimodular
    PolyMatrix s;  ///< rows x cols, diagonal, monic, divisibility chain
    PolyMatrix v;  ///< cols x cols, unimodular
    std::vector<Poly> invariant_factors;  ///< nonzero diagonal entries, in order

    std::size_t rank() const noexcept { return invariant_factors.size(); }
};

/// Smith normal form over K[t,1/t]; invariant factors are reported with the
/// t-power stripped and the body made monic (the associate normal form).
struct LaurentSnfResult {
    LaurentMatrix u;
    LaurentMatrix s;
    LaurentMatrix v;
    std::vector<Poly> invariant_factors;

    std::size_t rank() const noexcept { return invariant_factors.size(); }
};

/// Pivot: nonzero entry of minimal degree, ties by lowest (row, col).
SnfResult smith_normal_form(const PolyMatrix& m);

/// Columns are an R-basis of {x : m x = 0}.
PolyMatrix kernel_basis(const PolyMatrix& m);

/// One summand of R^n / span(sub): either R/(d) with d monic of positive
/// degree, or a free copy of R.
struct QuotientFactor {
    bool free = false;
    Poly torsion;  ///< meaningful when !free

    friend bool operator==(const QuotientFactor&, const QuotientFactor&) = default;
};

/// Decomposes R^ambient_rank / column-span(sub) as torsion summands in
/// divisibility order followed by free summands.
std::vector<QuotientFactor> quotient_decomposition(std::size_t ambient_rank, const PolyMatrix& sub);

// K[t,1/t] counterparts. The t-power content of each column is cleared by a
// unit rescaling, the K[t] routine runs, and the result is mapped back.
LaurentSnfResult smith_normal_form(const LaurentMatrix& m);
LaurentMatrix kernel_basis(const LaurentMatrix& m);
std::vector<QuotientFactor> quotient_decomposition(std::size_t ambient_rank, const LaurentMatrix& sub);

}  // namespace famdirac

namespace famdirac {

/// Inverse over the ring itself (K[t] resp. K[t,1/t]) when the matrix is
/// unimodular, i.e. its determinant is a unit; nullopt otherwise.
std::optional<PolyMatrix> unimodular_inverse(const PolyMatrix& m);
std::optional<LaurentMatrix> unimodular_inverse(const LaurentMatrix& m);

}  // namespace famdirac
