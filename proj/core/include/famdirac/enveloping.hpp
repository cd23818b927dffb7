#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "famdirac/combination.hpp"
#include "famdirac/lie_family.hpp"

namespace famdirac {

/// PBW monomial: exponent of each generator, indexed by PBW position.
using Monomial = std::vector<unsigned>;

/// Element of U(g) over the coefficient ring, in PBW normal form.
template <class Coeff>
using BasicUE = Combination<Monomial, Coeff>;
using UEElement = BasicUE<Poly>;
using LaurentUEElement = BasicUE<Laurent>;

template <class Coeff>
BasicUE<Coeff> ue_scalar(const BasicLieFamily<Coeff>& fam, const Coeff& c);

/// The generator b_i (basis index, not PBW position).
template <class Coeff>
BasicUE<Coeff> ue_generator(const BasicLieFamily<Coeff>& fam, std::size_t basis_index);

/// Element from basis-index exponents (declaration order), normalized.
template <class Coeff>
BasicUE<Coeff> ue_from_exponents(const BasicLieFamily<Coeff>& fam, const std::vector<unsigned>& exps, const Coeff& c);

/// Exponents of a PBW monomial reindexed by basis index.
template <class Coeff>
std::vector<unsigned> exponents_by_basis(const BasicLieFamily<Coeff>& fam, const Monomial& m);

/// PBW rewriting engine with a memo of generator products. Cheap to create;
/// reuse one instance for a batch of products over the same family.
template <class Coeff>
class PbwRing {
public:
    explicit PbwRing(const BasicLieFamily<Coeff>& fam);

    const BasicLieFamily<Coeff>& family() const noexcept { return *fam_; }
    BasicUE<Coeff> mul(const BasicUE<Coeff>& a, const BasicUE<Coeff>& b);
    BasicUE<Coeff> bracket(const BasicUE<Coeff>& a, const BasicUE<Coeff>& b);
    BasicUE<Coeff> pow(const BasicUE<Coeff>& a, unsigned e);

private:
    const BasicUE<Coeff>& times_generator(const Monomial& m, std::size_t pos);

    const BasicLieFamily<Coeff>* fam_;
    std::vector<std::size_t> order_;
    std::map<std::pair<Monomial, std::size_t>, BasicUE<Coeff>> memo_;
};

template <class Coeff>
BasicUE<Coeff> ue_mul(const BasicUE<Coeff>& a, const BasicUE<Coeff>& b, const BasicLieFamily<Coeff>& fam);

/// Omega = r^2 * sum_ij (beta^-1)_ij b_i b_j over the full form. Throws
/// DomainError("degenerate_form") if beta is singular or the result is not
/// defined over K[t].
UEElement casimir(const LieFamily& fam);

/// r^2 Omega(k, beta_k) + Omega(p, beta^r), assembled block by block.
UEElement casimir_decomposed(const LieFamily& fam);

/// Omega(k, beta_k) = sum_ij (beta_k^-1)_ij k_i k_j, the compact part.
UEElement k_casimir(const LieFamily& fam);

/// P_h: keeps the pure-h monomials.
UEElement hc_project(const UEElement& z, const LieFamily& fam);

/// rho-value used for the twist on each h element: rho(h_j) on t, r*rho(h_j) on a.
std::vector<Poly> rho_on_h(const LieFamily& fam);

/// HC = (rho-twist) o P_h. When Weyl data is present the image is checked
/// for W-invariance; failure throws DomainError("not_weyl_invariant").
UEElement hc_homomorphism(const UEElement& z, const LieFamily& fam);

/// Substitutes h_j -> sum_i w(i,j) h_i in a pure-h element.
UEElement weyl_act(const UEElement& s, const ScalarMatrix& w, const LieFamily& fam);

/// True iff HC(z) lies in S(t + t^n a) relative to the family z lives in:
/// the coefficient of every monomial of a-degree k is divisible by
/// t^((n - fam.n_deform()) k).
bool hc_subfamily_check(const UEElement& z, const LieFamily& fam, long n);
inline bool hc_subfamily_check(const UEElement& z, const LieFamily& fam) {
    return hc_subfamily_check(z, fam, fam.n_deform());
}

/// Evaluates a pure-h element at a functional given by its values on h.
Poly evaluate_on_h(const UEElement& s, const std::vector<Poly>& lambda, const LieFamily& fam);

/// lambda in Hom(h, R), as values on the h list of the Cartan data.
struct InfinitesimalCharacter {
    std::vector<std::string> labels;
    std::vector<Poly> values;

    friend bool operator==(const InfinitesimalCharacter&, const InfinitesimalCharacter&) = default;
};

/// The Weyl-orbit representative whose coefficient sequence (h order, then
/// ascending degree) is lexicographically greatest; its first nonzero
/// coefficient has positive real part (or zero real and positive imaginary
/// part) whenever the orbit contains such a member.
InfinitesimalCharacter canonical_character(const std::vector<Poly>& lambda, const LieFamily& fam);

/// Whether two functionals on h are conjugate under the Weyl data.
bool weyl_conjugate(const std::vector<Poly>& a, const std::vector<Poly>& b, const LieFamily& fam);

/// Solves HC(Omega)(lambda) = omega for a rank-one h. Throws
/// DomainError("not_divisible") when omega - HC(Omega)(0) is not divisible
/// by the quadratic coefficient; nullopt when no polynomial root exists.
std::optional<InfinitesimalCharacter> infinitesimal_character_from_casimir_scalar(const Poly& omega,
                                                                                  const LieFamily& fam);

/// Truncated Verma-like family U(g_n) (x)_{U(b+)} R_lambda with basis the
/// n- monomials of total degree <= truncation.
struct VermaModule {
    std::vector<Poly> lambda;        ///< highest weight on the h list
    unsigned truncation = 0;
    std::vector<Monomial> basis;     ///< PBW monomials supported on n-
};

VermaModule verma_family(const LieFamily& fam, const std::vector<Poly>& lambda, unsigned truncation);

/// Coordinates of u . basis[index]. Throws DomainError("truncation_exceeded")
/// if the result leaves the truncation.
std::vector<Poly> verma_act(const VermaModule& v, const UEElement& u, std::size_t index, PbwRing<Poly>& ring);

struct VermaReport {
    Poly casimir_scalar;              ///< Omega acting on the highest weight vector
    bool quasi_simple = false;        ///< same scalar on every basis vector
    InfinitesimalCharacter lambda_plus_rho;
    bool hc_consistent = false;       ///< HC(Omega)(lambda + rho) equals the scalar
    std::optional<InfinitesimalCharacter> extracted;  ///< rank-one h only
};

VermaReport verma_report(const LieFamily& fam, const std::vector<Poly>& lambda, unsigned truncation);

}  // namespace famdirac
