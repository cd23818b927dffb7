#include "famdirac/localization.hpp"

#include <algorithm>

#include "famdirac/smith.hpp"

namespace famdirac {

namespace {

LinComb<Laurent> localize(const LinComb<Poly>& v) {
    LinComb<Laurent> out;
    for (const auto& [k, c] : v) out.emplace_back(k, Laurent(c));
    return out;
}

template <class Key>
Combination<Key, Laurent> localize_terms(const Combination<Key, Poly>& x) {
    Combination<Key, Laurent> out;
    for (const auto& [k, c] : x.terms()) out.add(k, Laurent(c));
    return out;
}

/// Number of p-factors in a PBW monomial.
unsigned p_degree(const Monomial& m, const LieFamily& fam) {
    unsigned d = 0;
    for (std::size_t pos = 0; pos < m.size(); ++pos)
        if (!fam.is_compact(fam.pbw_order()[pos])) d += m[pos];
    return d;
}

std::vector<Poly> strip_units(const std::vector<Poly>& factors, bool strip_t) {
    std::vector<Poly> out;
    for (const Poly& p : factors) {
        Poly body = strip_t ? p.unshifted(p.valuation()) : p;
        if (!body.is_unit()) out.push_back(body.monic());
    }
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return a.str() < b.str(); });
    return out;
}

}  // namespace

LaurentFamily localize(const LieFamily& fam) {
    std::vector<BracketEntry<Laurent>> entries;
    for (std::size_t i = 0; i < fam.dim(); ++i)
        for (std::size_t j = i + 1; j < fam.dim(); ++j)
            if (!fam.bracket(i, j).empty()) entries.push_back({i, j, localize(fam.bracket(i, j))});
    return LaurentFamily(fam.basis(), entries, fam.n_deform(), famdirac::localize(fam.form()), fam.cartan(),
                         fam.weyl(), fam.isotropic());
}

LaurentQuadraticSpace localize(const QuadraticSpaceFamily& q) {
    LaurentQuadraticSpace out;
    out.basis = q.basis;
    out.labels = q.labels;
    out.form = famdirac::localize(q.form);
    out.form_inverse = famdirac::localize(q.form_inverse);
    out.iso_minus = q.iso_minus;
    out.iso_plus = q.iso_plus;
    out.iso_zero = q.iso_zero;
    out.epsilon = q.epsilon;
    return out;
}

LaurentUEElement localize(const UEElement& u) { return localize_terms(u); }
LaurentClifford localize(const CliffordElement& c) { return localize_terms(c); }
LaurentAElement localize(const AElement& a) { return localize_terms(a); }

PsiMap psi_map(const LieFamily& fam) {
    PsiMap out;
    for (std::size_t i = 0; i < fam.dim(); ++i) {
        out.labels.push_back(fam.element(i).label);
        out.factor.push_back(fam.is_compact(i) ? Laurent(1) : Laurent::monomial(Scalar(1), fam.n_deform()));
    }
    return out;
}

std::vector<Diagnostic> psi_lie_check(const LieFamily& fam) {
    const LaurentFamily def = localize(fam);
    const LaurentFamily cst = localize(constant_family(fam));
    const PsiMap psi = psi_map(fam);
    auto apply = [&](const LinComb<Laurent>& v) {
        LinComb<Laurent> out;
        for (const auto& [k, c] : v) out.emplace_back(k, c * psi.factor[k]);
        return out;
    };
    std::vector<Diagnostic> out;
    for (std::size_t i = 0; i < fam.dim(); ++i)
        for (std::size_t j = 0; j < fam.dim(); ++j) {
            LinComb<Laurent> lhs = apply(def.bracket(i, j));
            LinComb<Laurent> rhs = cst.bracket(LinComb<Laurent>{{i, psi.factor[i]}}, LinComb<Laurent>{{j, psi.factor[j]}});
            if (lhs != rhs)
                out.push_back({"psi_not_homomorphism",
                               "psi[" + psi.labels[i] + "," + psi.labels[j] + "] != [psi " + psi.labels[i] + ", psi " +
                                   psi.labels[j] + "]"});
        }
    return out;
}

LaurentUEElement psi_transport(const LaurentUEElement& u, const LieFamily& fam) {
    LaurentUEElement out;
    const long n = fam.n_deform();
    for (const auto& [m, c] : u.terms())
        out.add(m, c * Laurent::monomial(Scalar(1), n * static_cast<long>(p_degree(m, fam))));
    return out;
}

LaurentAElement psi_transport(const LaurentAElement& a, const LieFamily& fam) {
    LaurentAElement out;
    const long n = fam.n_deform();
    for (const auto& [key, c] : a.terms())
        out.add(key, c * Laurent::monomial(Scalar(1), n * static_cast<long>(p_degree(key.first, fam))));
    return out;
}

UEElement embed_in_constant(const UEElement& u, const LieFamily& fam) {
    UEElement out;
    const std::size_t n = static_cast<std::size_t>(fam.n_deform());
    for (const auto& [m, c] : u.terms()) out.add(m, c.shifted(n * p_degree(m, fam)));
    return out;
}

LocalizedDiracResult localized_dirac_check(const LieFamily& fam, const QuadraticSpaceFamily& q) {
    const LieFamily cst = constant_family(fam);
    const QuadraticSpaceFamily qc = rescaled_form(cst, q.epsilon);
    LocalizedDiracResult out;
    out.transported = psi_transport(localize(dirac_element(fam, q)), fam);
    out.expected = localize(dirac_element(cst, qc)) * Laurent::monomial(Scalar(1), fam.n_deform());
    out.equal = out.transported == out.expected;
    return out;
}

CohomologyLocalizationResult cohomology_localization_check(const LadderModule& v, const LieFamily& fam,
                                                           const QuadraticSpaceFamily& q, const WeightWindow& w,
                                                           bool validate) {
    CohomologyLocalizationResult out;
    const CohomologyReport r_side = dirac_cohomology(v, fam, q, w, validate);
    out.pass = true;
    for (const auto& e : r_side) {
        LocalizedWeight lw;
        lw.weight = e.weight;
        lw.free_rank_r = e.free_rank;
        lw.torsion_r = e.torsion;
        BlockCohomology b0 = block_cohomology(localize(ladder_weight_space_matrix(v, fam, q, e.weight)));
        lw.free_rank_r0 = b0.free_rank;
        lw.torsion_r0 = strip_units(b0.torsion, false);
        lw.consistent = lw.free_rank_r == lw.free_rank_r0 && strip_units(e.torsion, true) == lw.torsion_r0;
        out.pass = out.pass && lw.consistent;
        out.weights.push_back(std::move(lw));
    }
    return out;
}

}  // namespace famdirac
