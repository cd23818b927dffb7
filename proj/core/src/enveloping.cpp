#include "famdirac/enveloping.hpp"

#include <algorithm>
#include <numeric>

#include "famdirac/smith.hpp"

namespace famdirac {

template <class Coeff>
BasicUE<Coeff> ue_scalar(const BasicLieFamily<Coeff>& fam, const Coeff& c) {
    return BasicUE<Coeff>(Monomial(fam.dim(), 0), c);
}

template <class Coeff>
BasicUE<Coeff> ue_generator(const BasicLieFamily<Coeff>& fam, std::size_t basis_index) {
    Monomial m(fam.dim(), 0);
    m.at(fam.pbw_position(basis_index)) = 1;
    return BasicUE<Coeff>(m, Coeff(1));
}

template <class Coeff>
BasicUE<Coeff> ue_from_exponents(const BasicLieFamily<Coeff>& fam, const std::vector<unsigned>& exps, const Coeff& c) {
    if (exps.size() != fam.dim()) throw InvalidInput("bad_element", "exponent vector length must equal the family rank");
    // Declaration order may differ from PBW order; multiply out to normalize.
    PbwRing<Coeff> ring(fam);
    BasicUE<Coeff> out = ue_scalar(fam, c);
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > 0) out = ring.mul(out, ring.pow(ue_generator(fam, i), exps[i]));
    return out;
}

template <class Coeff>
std::vector<unsigned> exponents_by_basis(const BasicLieFamily<Coeff>& fam, const Monomial& m) {
    std::vector<unsigned> out(fam.dim(), 0);
    for (std::size_t p = 0; p < m.size(); ++p) out[fam.pbw_order()[p]] = m[p];
    return out;
}

template <class Coeff>
PbwRing<Coeff>::PbwRing(const BasicLieFamily<Coeff>& fam) : fam_(&fam), order_(fam.pbw_order()) {}

template <class Coeff>
const BasicUE<Coeff>& PbwRing<Coeff>::times_generator(const Monomial& m, std::size_t pos) {
    auto key = std::make_pair(m, pos);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::size_t last = m.size();
    for (std::size_t k = m.size(); k-- > 0;)
        if (m[k] > 0) {
            last = k;
            break;
        }
    BasicUE<Coeff> result;
    if (last == m.size() || last <= pos) {
        Monomial mm = m;
        ++mm[pos];
        result.add(mm, Coeff(1));
    } else {
        // m g = m' x g = m' g x + m' [x, g]
        Monomial prefix = m;
        --prefix[last];
        const BasicUE<Coeff> pg = times_generator(prefix, pos);
        for (const auto& [mono, c] : pg.terms())
            for (const auto& [mono2, c2] : times_generator(mono, last).terms()) result.add(mono2, c * c2);
        for (const auto& [k, c] : fam_->bracket(order_[last], order_[pos])) {
            const BasicUE<Coeff> pk = times_generator(prefix, fam_->pbw_position(k));
            for (const auto& [mono2, c2] : pk.terms()) result.add(mono2, c * c2);
        }
    }
    return memo_.emplace(std::move(key), std::move(result)).first->second;
}

template <class Coeff>
BasicUE<Coeff> PbwRing<Coeff>::mul(const BasicUE<Coeff>& a, const BasicUE<Coeff>& b) {
    BasicUE<Coeff> out;
    for (const auto& [mb, cb] : b.terms()) {
        BasicUE<Coeff> cur = a;
        for (std::size_t pos = 0; pos < mb.size(); ++pos)
            for (unsigned e = 0; e < mb[pos]; ++e) {
                BasicUE<Coeff> next;
                for (const auto& [mono, c] : cur.terms())
                    for (const auto& [mono2, c2] : times_generator(mono, pos).terms()) next.add(mono2, c * c2);
                cur = std::move(next);
            }
        out += cur * cb;
    }
    return out;
}

template <class Coeff>
BasicUE<Coeff> PbwRing<Coeff>::bracket(const BasicUE<Coeff>& a, const BasicUE<Coeff>& b) {
    return mul(a, b) - mul(b, a);
}

template <class Coeff>
BasicUE<Coeff> PbwRing<Coeff>::pow(const BasicUE<Coeff>& a, unsigned e) {
    BasicUE<Coeff> out = ue_scalar(*fam_, Coeff(1));
    for (unsigned k = 0; k < e; ++k) out = mul(out, a);
    return out;
}

template <class Coeff>
BasicUE<Coeff> ue_mul(const BasicUE<Coeff>& a, const BasicUE<Coeff>& b, const BasicLieFamily<Coeff>& fam) {
    PbwRing<Coeff> ring(fam);
    return ring.mul(a, b);
}

template class PbwRing<Poly>;
template class PbwRing<Laurent>;
template UEElement ue_scalar(const LieFamily&, const Poly&);
template LaurentUEElement ue_scalar(const LaurentFamily&, const Laurent&);
template UEElement ue_generator(const LieFamily&, std::size_t);
template LaurentUEElement ue_generator(const LaurentFamily&, std::size_t);
template UEElement ue_from_exponents(const LieFamily&, const std::vector<unsigned>&, const Poly&);
template LaurentUEElement ue_from_exponents(const LaurentFamily&, const std::vector<unsigned>&, const Laurent&);
template std::vector<unsigned> exponents_by_basis(const LieFamily&, const Monomial&);
template std::vector<unsigned> exponents_by_basis(const LaurentFamily&, const Monomial&);
template UEElement ue_mul(const UEElement&, const UEElement&, const LieFamily&);
template LaurentUEElement ue_mul(const LaurentUEElement&, const LaurentUEElement&, const LaurentFamily&);

namespace {

/// sum_ij x(i,j) b_idx[i] b_idx[j]
UEElement quadratic_element(const LieFamily& fam, const std::vector<std::size_t>& idx, const PolyMatrix& x,
                            PbwRing<Poly>& ring) {
    UEElement out;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (x(i, j).is_zero()) continue;
            out += ring.mul(ue_generator(fam, idx[i]), ue_generator(fam, idx[j])) * x(i, j);
        }
    return out;
}

PolyMatrix block(const PolyMatrix& m, const std::vector<std::size_t>& idx) {
    PolyMatrix b(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) b(i, j) = m(idx[i], idx[j]);
    return b;
}

PolyMatrix k_form_inverse(const LieFamily& fam) {
    auto inv = unimodular_inverse(block(fam.form(), fam.compact_indices()));
    if (!inv) throw DomainError("degenerate_form", "form restricted to k is not invertible over K[t]");
    return *inv;
}

bool is_pure_h(const Monomial& m, const LieFamily& fam) {
    const auto& h = fam.require_cartan().h;
    for (std::size_t p = 0; p < m.size(); ++p) {
        if (m[p] == 0) continue;
        if (std::find(h.begin(), h.end(), fam.pbw_order()[p]) == h.end()) return false;
    }
    return true;
}

/// Replaces each h_j by images[j] in a pure-h element.
UEElement substitute_h(const UEElement& s, const std::vector<UEElement>& images, const LieFamily& fam) {
    const auto& h = fam.require_cartan().h;
    PbwRing<Poly> ring(fam);
    UEElement out;
    for (const auto& [m, c] : s.terms()) {
        if (!is_pure_h(m, fam)) throw InvalidInput("bad_element", "expected an element of S(h)");
        UEElement term = ue_scalar(fam, c);
        for (std::size_t j = 0; j < h.size(); ++j) {
            unsigned e = m[fam.pbw_position(h[j])];
            if (e > 0) term = ring.mul(term, ring.pow(images[j], e));
        }
        out += term;
    }
    return out;
}

}  // namespace

UEElement casimir(const LieFamily& fam) {
    const std::size_t d = fam.dim();
    SnfResult snf = smith_normal_form(fam.form());
    if (snf.rank() != d) throw DomainError("degenerate_form", "form is degenerate");
    const Poly r2 = fam.r() * fam.r();
    PolyMatrix mid(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        auto [q, rem] = poly_divmod(r2, snf.s(i, i));
        if (!rem.is_zero()) throw DomainError("degenerate_form", "r^2 beta^-1 is not defined over K[t]");
        mid(i, i) = q;
    }
    PolyMatrix x = snf.v * mid * snf.u;
    std::vector<std::size_t> all(d);
    std::iota(all.begin(), all.end(), 0);
    PbwRing<Poly> ring(fam);
    return quadratic_element(fam, all, x, ring);
}

UEElement k_casimir(const LieFamily& fam) {
    PbwRing<Poly> ring(fam);
    return quadratic_element(fam, fam.compact_indices(), k_form_inverse(fam), ring);
}

UEElement casimir_decomposed(const LieFamily& fam) {
    PbwRing<Poly> ring(fam);
    const Poly r2 = fam.r() * fam.r();
    UEElement out = quadratic_element(fam, fam.compact_indices(), k_form_inverse(fam), ring) * r2;
    QuadraticSpaceFamily q = rescaled_form(fam);
    out += quadratic_element(fam, q.basis, q.form_inverse, ring);
    return out;
}

UEElement hc_project(const UEElement& z, const LieFamily& fam) {
    fam.require_cartan();
    UEElement out;
    for (const auto& [m, c] : z.terms())
        if (is_pure_h(m, fam)) out.add(m, c);
    return out;
}

std::vector<Poly> rho_on_h(const LieFamily& fam) {
    const CartanData& cd = fam.require_cartan();
    RhoData rd = compute_rho_data(fam);
    std::vector<Poly> out;
    for (std::size_t j = 0; j < cd.h.size(); ++j) {
        bool in_a = std::find(cd.a.begin(), cd.a.end(), cd.h[j]) != cd.a.end();
        out.push_back(in_a ? fam.r() * rd.rho[j] : Poly(rd.rho[j]));
    }
    return out;
}

UEElement weyl_act(const UEElement& s, const ScalarMatrix& w, const LieFamily& fam) {
    const auto& h = fam.require_cartan().h;
    std::vector<UEElement> images;
    for (std::size_t j = 0; j < h.size(); ++j) {
        UEElement img;
        for (std::size_t i = 0; i < h.size(); ++i) img += ue_generator(fam, h[i]) * Poly(w(i, j));
        images.push_back(img);
    }
    return substitute_h(s, images, fam);
}

UEElement hc_homomorphism(const UEElement& z, const LieFamily& fam) {
    const auto& h = fam.require_cartan().h;
    std::vector<Poly> rho = rho_on_h(fam);
    std::vector<UEElement> images;
    for (std::size_t j = 0; j < h.size(); ++j) images.push_back(ue_generator(fam, h[j]) - ue_scalar(fam, rho[j]));
    UEElement out = substitute_h(hc_project(z, fam), images, fam);
    for (const auto& w : fam.weyl())
        if (weyl_act(out, w, fam) != out)
            throw DomainError("not_weyl_invariant", "HC image is not Weyl invariant (element not central or bad Weyl data)");
    return out;
}

bool hc_subfamily_check(const UEElement& z, const LieFamily& fam, long n) {
    const CartanData& cd = fam.require_cartan();
    const long shift = std::max<long>(0, n - fam.n_deform());
    for (const auto& [m, c] : hc_homomorphism(z, fam).terms()) {
        long a_degree = 0;
        for (std::size_t k : cd.a) a_degree += m[fam.pbw_position(k)];
        if (!divides(t_power<Poly>(shift * a_degree), c)) return false;
    }
    return true;
}

Poly evaluate_on_h(const UEElement& s, const std::vector<Poly>& lambda, const LieFamily& fam) {
    const auto& h = fam.require_cartan().h;
    if (lambda.size() != h.size()) throw InvalidInput("bad_weight", "functional must have one value per h element");
    Poly out;
    for (const auto& [m, c] : s.terms()) {
        if (!is_pure_h(m, fam)) throw InvalidInput("bad_element", "expected an element of S(h)");
        Poly term = c;
        for (std::size_t j = 0; j < h.size(); ++j) term *= lambda[j].pow(m[fam.pbw_position(h[j])]);
        out += term;
    }
    return out;
}

namespace {

std::vector<Poly> compose_weyl(const std::vector<Poly>& lambda, const ScalarMatrix& w) {
    std::vector<Poly> out(lambda.size());
    for (std::size_t j = 0; j < lambda.size(); ++j)
        for (std::size_t i = 0; i < lambda.size(); ++i) out[j] += lambda[i] * w(i, j);
    return out;
}

std::vector<std::vector<Poly>> weyl_orbit(const std::vector<Poly>& lambda, const LieFamily& fam) {
    std::vector<std::vector<Poly>> orbit{lambda};
    for (const auto& w : fam.weyl()) {
        auto img = compose_weyl(lambda, w);
        if (std::find(orbit.begin(), orbit.end(), img) == orbit.end()) orbit.push_back(std::move(img));
    }
    return orbit;
}

}  // namespace

InfinitesimalCharacter canonical_character(const std::vector<Poly>& lambda, const LieFamily& fam) {
    const CartanData& cd = fam.require_cartan();
    if (lambda.size() != cd.h.size()) throw InvalidInput("bad_weight", "functional must have one value per h element");
    auto orbit = weyl_orbit(lambda, fam);
    long deg = 0;
    for (const auto& l : orbit)
        for (const auto& p : l) deg = std::max(deg, p.degree());
    auto padded_key = [deg](const std::vector<Poly>& l) {
        std::vector<Scalar> key;
        for (const auto& p : l)
            for (long k = 0; k <= deg; ++k) key.push_back(p.coeff(static_cast<std::size_t>(k)));
        return key;
    };
    auto best = std::max_element(orbit.begin(), orbit.end(),
                                 [&](const auto& a, const auto& b) { return padded_key(a) < padded_key(b); });
    InfinitesimalCharacter ic;
    for (std::size_t k : cd.h) ic.labels.push_back(fam.element(k).label);
    ic.values = *best;
    return ic;
}

bool weyl_conjugate(const std::vector<Poly>& a, const std::vector<Poly>& b, const LieFamily& fam) {
    auto orbit = weyl_orbit(a, fam);
    return std::find(orbit.begin(), orbit.end(), b) != orbit.end();
}

std::optional<InfinitesimalCharacter> infinitesimal_character_from_casimir_scalar(const Poly& omega,
                                                                                  const LieFamily& fam) {
    const CartanData& cd = fam.require_cartan();
    if (cd.h.size() != 1)
        throw DomainError("unsupported_rank", "infinitesimal character extraction needs a one-dimensional h");
    UEElement hc = hc_homomorphism(casimir(fam), fam);
    const std::size_t pos = fam.pbw_position(cd.h[0]);
    Poly quad, lin, cst;
    for (const auto& [m, c] : hc.terms()) {
        switch (m[pos]) {
            case 0: cst = c; break;
            case 1: lin = c; break;
            case 2: quad = c; break;
            default: throw DomainError("unsupported_center", "HC(Omega) is not quadratic in h");
        }
    }
    if (quad.is_zero() || !lin.is_zero())
        throw DomainError("unsupported_center", "HC(Omega) must have the shape a h^2 + c");
    auto [sq, rem] = poly_divmod(omega - cst, quad);
    if (!rem.is_zero())
        throw DomainError("not_divisible", "omega - HC(Omega)(0) = " + (omega - cst).str() + " is not divisible by " + quad.str());
    auto root = poly_sqrt(sq);
    if (!root) return std::nullopt;
    return canonical_character({*root}, fam);
}

VermaModule verma_family(const LieFamily& fam, const std::vector<Poly>& lambda, unsigned truncation) {
    const CartanData& cd = fam.require_cartan();
    if (!cd.a.empty()) throw DomainError("h_not_theta_fixed", "Verma families need a theta-fixed Cartan subalgebra (a = 0)");
    if (truncation < 1) throw InvalidInput("bad_truncation", "truncation must be at least 1");
    if (lambda.size() != cd.h.size()) throw InvalidInput("bad_weight", "lambda must have one value per h element");
    VermaModule v{lambda, truncation, {}};
    // Exponent vectors over n- by total degree, each degree in descending
    // lexicographic order: 1, y1, y2, y1^2, y1 y2, ...
    std::vector<std::size_t> pos;
    for (std::size_t k : cd.n_minus) pos.push_back(fam.pbw_position(k));
    for (unsigned deg = 0; deg <= truncation; ++deg) {
        std::vector<unsigned> e(pos.size(), 0);
        auto fill = [&](auto&& self, std::size_t i, unsigned left) -> void {
            if (i + 1 >= pos.size()) {
                if (pos.empty() && left > 0) return;
                if (!pos.empty()) e[i] = left;
                Monomial m(fam.dim(), 0);
                for (std::size_t j = 0; j < pos.size(); ++j) m[pos[j]] = e[j];
                v.basis.push_back(m);
                return;
            }
            for (unsigned x = left + 1; x-- > 0;) {
                e[i] = x;
                self(self, i + 1, left - x);
            }
        };
        fill(fill, 0, deg);
    }
    return v;
}

std::vector<Poly> verma_act(const VermaModule& v, const UEElement& u, std::size_t index, PbwRing<Poly>& ring) {
    const LieFamily& fam = ring.family();
    const CartanData& cd = fam.require_cartan();
    std::vector<Poly> out(v.basis.size());
    UEElement w = ring.mul(u, UEElement(v.basis.at(index), Poly(1)));
    for (const auto& [m, c] : w.terms()) {
        bool kills = false;
        for (std::size_t k : cd.n_plus) kills = kills || m[fam.pbw_position(k)] > 0;
        if (kills) continue;
        Poly coef = c;
        Monomial lower = m;
        for (std::size_t j = 0; j < cd.h.size(); ++j) {
            std::size_t p = fam.pbw_position(cd.h[j]);
            coef *= v.lambda[j].pow(m[p]);
            lower[p] = 0;
        }
        auto it = std::find(v.basis.begin(), v.basis.end(), lower);
        if (it == v.basis.end()) throw DomainError("truncation_exceeded", "action leaves the truncated Verma module");
        out[static_cast<std::size_t>(it - v.basis.begin())] += coef;
    }
    return out;
}

VermaReport verma_report(const LieFamily& fam, const std::vector<Poly>& lambda, unsigned truncation) {
    VermaModule v = verma_family(fam, lambda, truncation);
    PbwRing<Poly> ring(fam);
    UEElement omega = casimir(fam);
    VermaReport rep;
    rep.quasi_simple = true;
    for (std::size_t i = 0; i < v.basis.size(); ++i) {
        std::vector<Poly> img = verma_act(v, omega, i, ring);
        if (i == 0) rep.casimir_scalar = img[0];
        for (std::size_t j = 0; j < img.size(); ++j)
            if (img[j] != (j == i ? rep.casimir_scalar : Poly())) rep.quasi_simple = false;
    }
    std::vector<Poly> rho = rho_on_h(fam);
    std::vector<Poly> shifted = lambda;
    for (std::size_t j = 0; j < shifted.size(); ++j) shifted[j] += rho[j];
    rep.lambda_plus_rho = canonical_character(shifted, fam);
    rep.hc_consistent = evaluate_on_h(hc_homomorphism(omega, fam), shifted, fam) == rep.casimir_scalar;
    if (fam.require_cartan().h.size() == 1) rep.extracted = infinitesimal_character_from_casimir_scalar(rep.casimir_scalar, fam);
    return rep;
}

}  // namespace famdirac
