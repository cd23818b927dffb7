#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "famdirac/combination.hpp"
#include "famdirac/lie_family.hpp"

namespace famdirac {

/// Strictly increasing word over p-positions, as a bit mask (bit k = e_k).
using CliffordWord = std::uint64_t;

/// Element of Cl(p, beta^r) in normal form, with the relation
/// g(X) g(Y) + g(Y) g(X) = beta^r(X, Y).
template <class Coeff>
using BasicClifford = Combination<CliffordWord, Coeff>;
using CliffordElement = BasicClifford<Poly>;
using LaurentClifford = BasicClifford<Laurent>;

/// Vector of the spin module (exterior algebra on p-), words over p-positions.
template <class Coeff>
using BasicSpinVector = Combination<CliffordWord, Coeff>;
using SpinVector = BasicSpinVector<Poly>;

/// Indices of the set bits of a word, ascending.
std::vector<std::size_t> word_indices(CliffordWord w);
CliffordWord word_from_indices(const std::vector<std::size_t>& idx);

template <class Coeff>
BasicClifford<Coeff> cl_scalar(const Coeff& c) {
    return BasicClifford<Coeff>(0, c);
}

/// gamma(e_pos) for a p-position.
template <class Coeff>
BasicClifford<Coeff> cl_gamma(const BasicQuadraticSpace<Coeff>& q, std::size_t pos);

template <class Coeff>
BasicClifford<Coeff> cl_mul(const BasicClifford<Coeff>& a, const BasicClifford<Coeff>& b,
                            const BasicQuadraticSpace<Coeff>& q);

template <class Coeff>
BasicClifford<Coeff> cl_bracket(const BasicClifford<Coeff>& a, const BasicClifford<Coeff>& b,
                                const BasicQuadraticSpace<Coeff>& q) {
    return cl_mul(a, b, q) - cl_mul(b, a, q);
}

/// R_{a,b}(v) = beta(b,v) a - beta(a,v) b, as a matrix on the p-basis.
template <class Coeff>
Matrix<Coeff> so_from_pair(std::size_t a, std::size_t b, const BasicQuadraticSpace<Coeff>& q);

/// beta(Tu, v) + beta(u, Tv) = 0 on all basis pairs.
template <class Coeff>
bool is_antisymmetric(const Matrix<Coeff>& t, const BasicQuadraticSpace<Coeff>& q);

/// Embedding so(p, beta^r) -> Cl: phi(T) = 1/4 sum_i [g(T e_i), g(e'_i)] with
/// e'_i the beta^r-dual basis. Throws InvalidInput("not_antisymmetric").
template <class Coeff>
BasicClifford<Coeff> phi(const Matrix<Coeff>& t, const BasicQuadraticSpace<Coeff>& q);

/// alpha(X) = phi(ad X restricted to p) for a compact basis index.
template <class Coeff>
BasicClifford<Coeff> alpha(const BasicLieFamily<Coeff>& fam, const BasicQuadraticSpace<Coeff>& q, std::size_t k);

/// Action of a Clifford element on the spin module: wedge for p-, the
/// contraction derivation for p+, and +-epsilon by parity for p0.
/// Throws InvalidInput("missing_isotropic_split") without a full split.
template <class Coeff>
BasicSpinVector<Coeff> spin_act(const BasicClifford<Coeff>& c, const BasicSpinVector<Coeff>& s,
                                const BasicQuadraticSpace<Coeff>& q);

/// Monomial basis of the spin module, by degree then by word.
template <class Coeff>
std::vector<CliffordWord> spin_basis(const BasicQuadraticSpace<Coeff>& q);

/// "1" or the p-labels joined by "^".
template <class Coeff>
std::string word_label(CliffordWord w, const BasicQuadraticSpace<Coeff>& q);

struct SpinWeight {
    std::vector<Scalar> weight;  ///< on the t list of the Cartan data
    CliffordWord word = 0;
};

/// t-weights of the spin basis under alpha. Throws
/// DomainError("spin_not_diagonal") if some alpha(t_j) is not diagonal.
std::vector<SpinWeight> spin_weights(const LieFamily& fam, const QuadraticSpaceFamily& q);

}  // namespace famdirac
