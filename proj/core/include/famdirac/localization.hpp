#pragma once

#include <string>
#include <vector>

#include "famdirac/ladder.hpp"

namespace famdirac {

/// Coefficientwise base change K[t] -> K[t, 1/t].
LaurentFamily localize(const LieFamily& fam);
LaurentQuadraticSpace localize(const QuadraticSpaceFamily& q);
LaurentUEElement localize(const UEElement& u);
LaurentClifford localize(const CliffordElement& c);
LaurentAElement localize(const AElement& a);

/// psi: R0 (x) g_(n) -> R0 (x) g, b_i |-> factor[i] * b_i in the constant
/// family basis; factor is t^n on p and 1 on k.
struct PsiMap {
    std::vector<std::string> labels;
    std::vector<Laurent> factor;

    Laurent inverse_factor(std::size_t i) const { return factor.at(i).inverse(); }
};

PsiMap psi_map(const LieFamily& fam);

/// Checks psi[b_i, b_j] = [psi b_i, psi b_j] on every basis pair against the
/// localized constant family. Returns one diagnostic per failing pair.
std::vector<Diagnostic> psi_lie_check(const LieFamily& fam);

/// Transports an element of U(R0 (x) g_(n)) to U(R0 (x) g). Clifford words
/// are untouched: both families share the rescaled form beta^r.
LaurentUEElement psi_transport(const LaurentUEElement& u, const LieFamily& fam);
LaurentAElement psi_transport(const LaurentAElement& a, const LieFamily& fam);

/// The R-level inclusion U(g_(n)) -> U(R x g) (t^n on each p-factor).
UEElement embed_in_constant(const UEElement& u, const LieFamily& fam);

struct LocalizedDiracResult {
    LaurentAElement transported;  ///< psi(localize D_(n))
    LaurentAElement expected;     ///< t^n localize(D) of the constant family
    bool equal = false;
};

LocalizedDiracResult localized_dirac_check(const LieFamily& fam, const QuadraticSpaceFamily& q);

struct LocalizedWeight {
    long weight = 0;
    std::size_t free_rank_r = 0, free_rank_r0 = 0;
    std::vector<Poly> torsion_r;   ///< over K[t]
    std::vector<Poly> torsion_r0;  ///< over K[t, 1/t], unit-normalized
    bool consistent = false;
};

struct CohomologyLocalizationResult {
    std::vector<LocalizedWeight> weights;
    bool pass = false;
};

/// Compares H_D over R with the cohomology of the localized blocks over R0:
/// free ranks agree and R-torsion with t-powers removed matches R0-torsion.
CohomologyLocalizationResult cohomology_localization_check(const LadderModule& v, const LieFamily& fam,
                                                           const QuadraticSpaceFamily& q, const WeightWindow& w,
                                                           bool validate = true);

}  // namespace famdirac
