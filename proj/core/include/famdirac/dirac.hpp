#pragma once

#include <utility>

#include "famdirac/clifford.hpp"
#include "famdirac/enveloping.hpp"

namespace famdirac {

/// Element of A = U(g) (x)_R Cl(p, beta^r); the two factors commute.
template <class Coeff>
using BasicAElement = Combination<std::pair<Monomial, CliffordWord>, Coeff>;
using AElement = BasicAElement<Poly>;
using LaurentAElement = BasicAElement<Laurent>;

template <class Coeff>
BasicAElement<Coeff> a_tensor(const BasicUE<Coeff>& u, const BasicClifford<Coeff>& c);

/// u (x) 1 and 1 (x) c.
template <class Coeff>
BasicAElement<Coeff> a_from_ue(const BasicUE<Coeff>& u) {
    return a_tensor(u, cl_scalar(Coeff(1)));
}
template <class Coeff>
BasicAElement<Coeff> a_from_clifford(const BasicLieFamily<Coeff>& fam, const BasicClifford<Coeff>& c) {
    return a_tensor(ue_scalar(fam, Coeff(1)), c);
}

/// Multiplication in A, reusing one PBW memo across products.
template <class Coeff>
class ARing {
public:
    ARing(const BasicLieFamily<Coeff>& fam, const BasicQuadraticSpace<Coeff>& q) : pbw_(fam), q_(&q) {}

    BasicAElement<Coeff> mul(const BasicAElement<Coeff>& x, const BasicAElement<Coeff>& y);
    BasicAElement<Coeff> bracket(const BasicAElement<Coeff>& x, const BasicAElement<Coeff>& y) {
        return mul(x, y) - mul(y, x);
    }
    const BasicLieFamily<Coeff>& family() const noexcept { return pbw_.family(); }
    const BasicQuadraticSpace<Coeff>& space() const noexcept { return *q_; }

private:
    PbwRing<Coeff> pbw_;
    const BasicQuadraticSpace<Coeff>* q_;
};

template <class Coeff>
BasicAElement<Coeff> a_mul(const BasicAElement<Coeff>& x, const BasicAElement<Coeff>& y,
                           const BasicLieFamily<Coeff>& fam, const BasicQuadraticSpace<Coeff>& q);

/// Delta(X) = X (x) 1 + 1 (x) alpha(X) for a compact basis index.
template <class Coeff>
BasicAElement<Coeff> diagonal_embedding(const BasicLieFamily<Coeff>& fam, const BasicQuadraticSpace<Coeff>& q,
                                        std::size_t k);

/// D = sum_ij (beta^r)^-1_ij e_i (x) g(e_j) over the p-basis.
template <class Coeff>
BasicAElement<Coeff> dirac_element(const BasicLieFamily<Coeff>& fam, const BasicQuadraticSpace<Coeff>& q);

/// D = sum_i f_i (x) g(f'_i) for the basis f whose p-coordinates are the
/// columns of `basis` (invertible over R) and its beta^r-dual f'.
/// Throws InvalidInput("degenerate_basis") if `basis` is not invertible.
AElement dirac_element_from_basis(const LieFamily& fam, const QuadraticSpaceFamily& q, const PolyMatrix& basis);

/// Delta(Omega(k, beta_k)).
AElement delta_k_casimir(const LieFamily& fam, const QuadraticSpaceFamily& q);

struct DiracSquareResult {
    AElement lhs;  ///< 2 D^2
    AElement rhs;  ///< Omega (x) 1 - r^2 Delta(Omega_k) + r^2 (|rho|^2 - |rho_k|^2)
    Poly constant; ///< r^2 (|rho|^2 - |rho_k|^2)
    bool equal = false;
};

DiracSquareResult dirac_square_check(const LieFamily& fam, const QuadraticSpaceFamily& q);

}  // namespace famdirac
