#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "famdirac/matrix.hpp"
#include "famdirac/ring.hpp"

namespace famdirac {

/// Eigenspace of the Cartan involution a basis element belongs to.
enum class Parity { compact, noncompact };

struct BasisElement {
    std::string label;
    Parity parity = Parity::compact;

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Triangular decomposition g = n- + h + n+ with h = t + a (t compact,
/// a noncompact). All entries are basis indices.
struct CartanData {
    std::vector<std::size_t> n_minus, h, n_plus, t, a;

    friend bool operator==(const CartanData&, const CartanData&) = default;
};

/// User-chosen dual maximal isotropic split of p (basis indices), plus the
/// optional one-dimensional p0 in odd rank.
struct IsotropicSplit {
    std::vector<std::size_t> minus, plus, zero;

    friend bool operator==(const IsotropicSplit&, const IsotropicSplit&) = default;
};

/// Sparse vector over the basis, sorted by index, no zero coefficients.
template <class Coeff>
using LinComb = std::vector<std::pair<std::size_t, Coeff>>;

/// Bracket table entry [b_i, b_j] as given by the user.
template <class Coeff>
struct BracketEntry {
    std::size_t i, j;
    LinComb<Coeff> value;
};

/// Algebraic family of Lie algebras over K[t] (or K[t,1/t]): a free module
/// with labeled basis, structure constants, the Cartan involution encoded in
/// the basis parities, a symmetric bilinear form, and optional Cartan and
/// Weyl data. The index n_deform records that this is g_(n) with r = t^n.
template <class Coeff>
class BasicLieFamily {
public:
    BasicLieFamily() = default;

    /// Missing [b_j, b_i] entries are filled by antisymmetry. Throws
    /// InvalidInput on malformed indices or dimensions; algebraic invariants
    /// are checked separately by validate_family.
    BasicLieFamily(std::vector<BasisElement> basis, const std::vector<BracketEntry<Coeff>>& brackets, long n_deform,
                   Matrix<Coeff> form, std::optional<CartanData> cartan = std::nullopt,
                   std::vector<ScalarMatrix> weyl = {}, std::optional<IsotropicSplit> isotropic = std::nullopt);

    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<BasisElement>& basis() const noexcept { return basis_; }
    const BasisElement& element(std::size_t i) const { return basis_.at(i); }
    std::optional<std::size_t> index_of(const std::string& label) const;
    std::size_t require_index(const std::string& label) const;

    bool is_compact(std::size_t i) const { return basis_.at(i).parity == Parity::compact; }
    /// +1 on compact, -1 on noncompact basis elements.
    int theta(std::size_t i) const { return is_compact(i) ? 1 : -1; }
    const std::vector<std::size_t>& compact_indices() const noexcept { return compact_; }
    const std::vector<std::size_t>& noncompact_indices() const noexcept { return noncompact_; }
    /// Position of a noncompact basis index inside noncompact_indices().
    std::optional<std::size_t> p_position(std::size_t i) const;

    const LinComb<Coeff>& bracket(std::size_t i, std::size_t j) const { return table_.at(i * dim() + j); }
    /// [u, v] for arbitrary combinations.
    LinComb<Coeff> bracket(const LinComb<Coeff>& u, const LinComb<Coeff>& v) const;
    /// Coefficient of b_k in [b_i, b_j].
    Coeff structure_constant(std::size_t i, std::size_t j, std::size_t k) const;

    long n_deform() const noexcept { return n_; }
    /// The generator r = t^n of the ideal fixing the family.
    Coeff r() const { return t_power<Coeff>(n_); }

    const Matrix<Coeff>& form() const noexcept { return form_; }
    const std::optional<CartanData>& cartan() const noexcept { return cartan_; }
    const CartanData& require_cartan() const;
    const std::vector<ScalarMatrix>& weyl() const noexcept { return weyl_; }
    const std::optional<IsotropicSplit>& isotropic() const noexcept { return isotropic_; }

    /// PBW ordering: n-, h, n+ when Cartan data covers the basis, declaration
    /// order otherwise. pbw_order()[pos] is a basis index.
    const std::vector<std::size_t>& pbw_order() const noexcept { return pbw_order_; }
    std::size_t pbw_position(std::size_t basis_index) const { return pbw_pos_.at(basis_index); }

    friend bool operator==(const BasicLieFamily&, const BasicLieFamily&) = default;

private:
    std::vector<BasisElement> basis_;
    std::vector<LinComb<Coeff>> table_;  // dim x dim, row major
    long n_ = 0;
    Matrix<Coeff> form_;
    std::optional<CartanData> cartan_;
    std::vector<ScalarMatrix> weyl_;
    std::optional<IsotropicSplit> isotropic_;
    std::vector<std::size_t> compact_, noncompact_;
    std::vector<std::size_t> pbw_order_, pbw_pos_;
};

using LieFamily = BasicLieFamily<Poly>;
using LaurentFamily = BasicLieFamily<Laurent>;

extern template class BasicLieFamily<Poly>;
extern template class BasicLieFamily<Laurent>;

/// Rescaled quadratic space (p, beta^r) with beta|p = r^2 beta^r, and the
/// isotropic split used for the spin module. Positions index the p-basis
/// (noncompact basis elements in declaration order).
template <class Coeff>
struct BasicQuadraticSpace {
    std::vector<std::size_t> basis;  ///< family basis index of each p-position
    std::vector<std::string> labels;
    Matrix<Coeff> form;              ///< beta^r in the p-basis
    Matrix<Coeff> form_inverse;      ///< (beta^r)^-1; exists since beta^r is unimodular
    std::vector<std::size_t> iso_minus, iso_plus, iso_zero;
    int epsilon = 1;                 ///< sign choice for p0 in odd rank

    std::size_t dim() const noexcept { return basis.size(); }
    bool has_spin_split() const noexcept { return iso_minus.size() + iso_plus.size() + iso_zero.size() == dim(); }

    friend bool operator==(const BasicQuadraticSpace&, const BasicQuadraticSpace&) = default;
};

using QuadraticSpaceFamily = BasicQuadraticSpace<Poly>;
using LaurentQuadraticSpace = BasicQuadraticSpace<Laurent>;

/// Half-sums of positive roots and their norms for the constant fiber.
struct RhoData {
    std::vector<Scalar> rho;    ///< rho(h_j) for the h list of the Cartan data
    std::vector<Scalar> rho_k;  ///< rho_k(t_j) for the t list
    Scalar rho_norm_sq;
    Scalar rho_k_norm_sq;
};

struct Diagnostic {
    std::string code;
    std::string message;
};

/// Runs every family invariant: antisymmetry, Jacobi, theta-automorphism
/// (bracket eigenspace containments), form symmetry, invariance and
/// theta-orthogonality, and Cartan/Weyl data consistency.
std::vector<Diagnostic> validate_family(const LieFamily& fam);

/// g_(n) = (K[t] x k) + (t^n K[t] x p) from a constant family.
LieFamily build_deformation_family(const LieFamily& constant, long n);

/// Inverse of build_deformation_family: recovers the constant family R x g
/// in the untwisted basis. Throws if the [p,p] data is not divisible by t^2n.
LieFamily constant_family(const LieFamily& fam);

/// beta^r = beta|p / r^2 together with the isotropic split (user data, or
/// p meet n-/n+ when the Cartan subalgebra is compact).
QuadraticSpaceFamily rescaled_form(const LieFamily& fam, int epsilon = 1);

RhoData compute_rho_data(const LieFamily& fam);

/// Specializes t to a scalar (the fiber at t = x), as a constant family.
LieFamily specialize(const LieFamily& fam, const Scalar& x);

/// Matrix of ad(b_k) restricted to p, in the p-basis.
template <class Coeff>
Matrix<Coeff> ad_on_p(const BasicLieFamily<Coeff>& fam, std::size_t k);

}  // namespace famdirac
