#include "famdirac/ladder.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "famdirac/smith.hpp"

namespace famdirac {

namespace {

bool is_even(long n) { return n % 2 == 0; }

std::string rung_label(long n, CliffordWord s, const QuadraticSpaceFamily& q) {
    return "v_" + std::to_string(n) + "⊗" + word_label(s, q);
}

std::string vector_label(const std::vector<Poly>& coords, const std::vector<std::pair<long, CliffordWord>>& basis,
                         const QuadraticSpaceFamily& q) {
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (coords[i] != Poly(1)) out += "(" + coords[i].str() + ")*";
        out += rung_label(basis[i].first, basis[i].second, q);
    }
    return out.empty() ? "0" : out;
}

long integral_weight(const Scalar& s) {
    if (!s.is_integer()) throw DomainError("non_integral_weight", "spin weight " + s.str() + " is not an integer");
    return s.re().get_num().get_si();
}

std::map<CliffordWord, long> spin_weight_map(const LieFamily& fam, const QuadraticSpaceFamily& q) {
    std::map<CliffordWord, long> out;
    for (const auto& sw : spin_weights(fam, q)) {
        if (sw.weight.size() != 1) throw InvalidInput("not_sl2_shaped", "ladder modules need a one-dimensional t");
        out[sw.word] = integral_weight(sw.weight[0]);
    }
    return out;
}

LadderVector act_generator(const LadderModule& v, const Sl2Shape& s, std::size_t b, const LadderVector& x) {
    LadderVector out;
    for (const auto& [n, c] : x.terms()) {
        if (b == s.x) out.add(n + 2, c * v.a_at(n));
        else if (b == s.y) out.add(n - 2, c * v.b_at(n - 2));
        else if (b == s.h) out.add(n, c * Poly(n));
        else throw InvalidInput("not_sl2_shaped", "unexpected generator");
    }
    return out;
}

}  // namespace

std::string to_string(LadderKind kind) {
    switch (kind) {
        case LadderKind::ray_up: return "ray_up";
        case LadderKind::ray_down: return "ray_down";
        case LadderKind::finite: return "finite";
        case LadderKind::lattice_even: return "lattice_even";
        case LadderKind::lattice_odd: return "lattice_odd";
    }
    return "finite";
}

LadderKind parse_ladder_kind(const std::string& text) {
    for (LadderKind k : {LadderKind::ray_up, LadderKind::ray_down, LadderKind::finite, LadderKind::lattice_even,
                         LadderKind::lattice_odd})
        if (to_string(k) == text) return k;
    throw InvalidInput("bad_ladder", "unknown ladder kind '" + text + "'");
}

bool LadderModule::contains(long n) const {
    switch (kind) {
        case LadderKind::ray_up: return n >= m && is_even(n - m);
        case LadderKind::ray_down: return n <= -m && is_even(n + m);
        case LadderKind::finite: return n >= -m && n <= m && is_even(n - m);
        case LadderKind::lattice_even: return is_even(n);
        case LadderKind::lattice_odd: return !is_even(n);
    }
    return false;
}

Poly LadderModule::a_at(long n) const { return contains(n) && contains(n + 2) ? a.at(n) : Poly(); }
Poly LadderModule::b_at(long n) const { return contains(n) && contains(n + 2) ? b.at(n) : Poly(); }

WeightWindow default_window(const LadderModule& v) {
    switch (v.kind) {
        case LadderKind::ray_up: return {v.m - 1, v.m + 5};
        case LadderKind::ray_down: return {-v.m - 5, -v.m + 1};
        case LadderKind::finite: return {-v.m - 1, v.m + 1};
        case LadderKind::lattice_even: return {-9, 9};
        case LadderKind::lattice_odd: return {-10, 8};
    }
    return {};
}

void require_window(const LadderModule& v, const WeightWindow& w) {
    bool ok = w.lo <= w.hi;
    switch (v.kind) {
        case LadderKind::ray_up: ok = ok && w.lo <= v.m - 1 && w.hi >= v.m + 3; break;
        case LadderKind::ray_down: ok = ok && w.lo <= -v.m - 3 && w.hi >= -v.m + 1; break;
        case LadderKind::finite: ok = ok && w.lo <= -v.m - 1 && w.hi >= v.m + 1; break;
        default: {
            long count = 0;
            for (long mu = w.lo; mu <= w.hi && ok; ++mu)
                if (v.contains(mu - 1) || v.contains(mu + 1)) ++count;
            ok = ok && count >= 3;
        }
    }
    if (!ok)
        throw InvalidInput("window_too_small", "window " + std::to_string(w.lo) + ".." + std::to_string(w.hi) +
                                                   " does not cover the boundary rungs of the " + to_string(v.kind) +
                                                   " ladder");
}

Sl2Shape require_sl2_shape(const LieFamily& fam) {
    auto fail = [](const std::string& why) { throw InvalidInput("not_sl2_shaped", why); };
    if (!fam.cartan()) fail("family has no Cartan data");
    const CartanData& cd = *fam.cartan();
    if (cd.h.size() != 1 || cd.t.size() != 1 || cd.n_plus.size() != 1 || cd.n_minus.size() != 1 || fam.dim() != 3)
        fail("ladder modules need a rank-one family h + <x> + <y> with h compact");
    Sl2Shape s{cd.h[0], cd.n_plus[0], cd.n_minus[0]};
    if (fam.bracket(s.h, s.x) != LinComb<Poly>{{s.x, Poly(2)}} || fam.bracket(s.h, s.y) != LinComb<Poly>{{s.y, Poly(-2)}})
        fail("ladder modules need [h,x] = 2x and [h,y] = -2y");
    return s;
}

LadderVector ladder_act(const LadderModule& v, const LieFamily& fam, const UEElement& u, long rung) {
    const Sl2Shape s = require_sl2_shape(fam);
    LadderVector out;
    for (const auto& [m, c] : u.terms()) {
        LadderVector cur(rung, Poly(1));
        for (std::size_t pos = m.size(); pos-- > 0 && !cur.is_zero();)
            for (unsigned e = 0; e < m[pos]; ++e) cur = act_generator(v, s, fam.pbw_order()[pos], cur);
        out += cur * c;
    }
    return out;
}

LadderSpinVector ladder_act(const LadderModule& v, const LieFamily& fam, const QuadraticSpaceFamily& q,
                            const AElement& a, long rung, CliffordWord spin) {
    LadderSpinVector out;
    const SpinVector s(spin, Poly(1));
    for (const auto& [key, c] : a.terms()) {
        SpinVector sv = spin_act(CliffordElement(key.second, Poly(1)), s, q);
        if (sv.is_zero()) continue;
        LadderVector lv = ladder_act(v, fam, UEElement(key.first, Poly(1)), rung);
        for (const auto& [n, cn] : lv.terms())
            for (const auto& [w, cw] : sv.terms()) out.add({n, w}, c * cn * cw);
    }
    return out;
}

Poly ladder_casimir_scalar(const LadderModule& v, const LieFamily& fam, long rung) {
    if (!v.contains(rung)) throw InvalidInput("weight_out_of_range", "v_" + std::to_string(rung) + " is not a rung");
    LadderVector img = ladder_act(v, fam, casimir(fam), rung);
    return img.coeff(rung);
}

std::vector<Diagnostic> validate_ladder(const LadderModule& v, const LieFamily& fam, const WeightWindow& w) {
    std::vector<Diagnostic> out;
    const Sl2Shape s = require_sl2_shape(fam);
    if ((v.kind == LadderKind::ray_up || v.kind == LadderKind::ray_down) && v.m < 1)
        out.push_back({"bad_parameters", "ray ladders need m >= 1"});
    if (v.kind == LadderKind::finite && v.m < 0) out.push_back({"bad_parameters", "finite ladders need m >= 0"});
    if (!out.empty()) return out;

    std::vector<long> rungs;
    for (long n = w.lo - 1; n <= w.hi + 1; ++n)
        if (v.contains(n)) rungs.push_back(n);

    std::optional<Poly> omega;
    for (long n : rungs) {
        Poly on = ladder_casimir_scalar(v, fam, n);
        if (!omega) omega = on;
        else if (on != *omega) {
            out.push_back({"casimir_inconsistent", "Omega acts by " + on.str() + " on v_" + std::to_string(n) +
                                                       " but by " + omega->str() + " on v_" + std::to_string(rungs[0])});
            break;
        }
    }

    PbwRing<Poly> ring(fam);
    UEElement x = ue_generator(fam, s.x), y = ue_generator(fam, s.y);
    UEElement rel = ring.bracket(x, y);
    for (const auto& [k, c] : fam.bracket(s.x, s.y)) rel -= ue_generator(fam, k) * c;
    for (long n : rungs)
        if (!ladder_act(v, fam, rel, n).is_zero()) {
            out.push_back({"module_relation", "[x,y] relation fails on v_" + std::to_string(n)});
            break;
        }

    for (long n : rungs)
        if (v.contains(n + 2) && (v.a.at(n) * v.b.at(n)).is_zero()) {
            out.push_back({"not_generically_irreducible", "A_n B_n vanishes identically at n = " + std::to_string(n)});
            break;
        }
    return out;
}

std::vector<std::pair<long, CliffordWord>> ladder_weight_space_basis(const LadderModule& v, const LieFamily& fam,
                                                                     const QuadraticSpaceFamily& q, long mu) {
    std::vector<std::pair<long, CliffordWord>> out;
    for (const auto& [word, wt] : spin_weight_map(fam, q))
        if (v.contains(mu - wt)) out.emplace_back(mu - wt, word);
    std::sort(out.begin(), out.end());
    return out;
}

PolyMatrix ladder_weight_space_matrix(const LadderModule& v, const LieFamily& fam, const QuadraticSpaceFamily& q,
                                      long mu) {
    auto basis = ladder_weight_space_basis(v, fam, q, mu);
    if (basis.empty())
        throw InvalidInput("weight_out_of_range", "weight " + std::to_string(mu) + " has an empty weight space");
    const AElement d = dirac_element(fam, q);
    PolyMatrix m(basis.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
        for (const auto& [key, c] : ladder_act(v, fam, q, d, basis[col].first, basis[col].second).terms()) {
            auto it = std::find(basis.begin(), basis.end(), key);
            if (it == basis.end()) throw InvariantViolation("weight_not_preserved", "D does not preserve the weight space");
            m(static_cast<std::size_t>(it - basis.begin()), col) = c;
        }
    }
    return m;
}

BlockCohomology block_cohomology(const PolyMatrix& d) {
    BlockCohomology out;
    PolyMatrix ker = kernel_basis(d);
    const std::size_t k = ker.cols();
    if (k == 0) return out;
    PolyMatrix rel = kernel_basis(hconcat(ker, d * Poly(-1)));
    PolyMatrix c = rel.row_range(0, k);
    PolyMatrix gens = ker;
    std::size_t rank = 0;
    std::vector<Poly> diag;
    if (c.cols() > 0) {
        SnfResult snf = smith_normal_form(c);
        rank = snf.rank();
        diag = snf.invariant_factors;
        gens = ker * *unimodular_inverse(snf.u);
    }
    for (std::size_t i = 0; i < k; ++i) {
        bool torsion = i < rank && !diag[i].is_unit();
        bool free = i >= rank;
        if (!torsion && !free) continue;
        if (torsion) out.torsion.push_back(diag[i]);
        else ++out.free_rank;
        std::vector<Poly> col;
        for (std::size_t r = 0; r < gens.rows(); ++r) col.push_back(gens(r, i));
        out.generators.push_back(std::move(col));
    }
    return out;
}

BlockCohomology block_cohomology(const LaurentMatrix& d) {
    BlockCohomology out;
    LaurentMatrix ker = kernel_basis(d);
    const std::size_t k = ker.cols();
    if (k == 0) return out;
    LaurentMatrix rel = kernel_basis(hconcat(ker, d * Laurent(-1)));
    LaurentMatrix c = rel.row_range(0, k);
    for (const auto& f : quotient_decomposition(k, c)) {
        if (f.free) ++out.free_rank;
        else out.torsion.push_back(f.torsion);
    }
    return out;
}

CohomologyReport dirac_cohomology(const LadderModule& v, const LieFamily& fam, const QuadraticSpaceFamily& q,
                                  const WeightWindow& w, bool validate) {
    require_sl2_shape(fam);
    if (validate) {
        require_window(v, w);
        auto diags = validate_ladder(v, fam, w);
        if (!diags.empty()) throw InvariantViolation(diags.front().code, diags.front().message);
    }
    CohomologyReport report;
    for (long mu = w.lo; mu <= w.hi; ++mu) {
        auto basis = ladder_weight_space_basis(v, fam, q, mu);
        if (basis.empty()) continue;
        BlockCohomology bc = block_cohomology(ladder_weight_space_matrix(v, fam, q, mu));
        CohomologyEntry e{mu, bc.free_rank, bc.torsion, {}};
        for (const auto& g : bc.generators) e.labels.push_back(vector_label(g, basis, q));
        report.push_back(std::move(e));
    }
    return report;
}

VoganReport vogan_check(const LadderModule& v, const LieFamily& fam, const QuadraticSpaceFamily& q,
                        const std::optional<WeightWindow>& w) {
    const WeightWindow win = w.value_or(default_window(v));
    VoganReport rep;
    rep.cohomology = dirac_cohomology(v, fam, q, win);
    long rung = win.lo - 1;
    while (!v.contains(rung)) ++rung;
    rep.omega = ladder_casimir_scalar(v, fam, rung);
    rep.lambda = infinitesimal_character_from_casimir_scalar(rep.omega, fam);
    const RhoData rd = compute_rho_data(fam);
    for (const auto& e : rep.cohomology) {
        if (e.is_zero()) continue;
        VoganEntry ve{e.weight, {Poly(Scalar(e.weight) + rd.rho_k.at(0))}, false};
        ve.conjugate = rep.lambda && weyl_conjugate(rep.lambda->values, ve.expected, fam);
        rep.entries.push_back(std::move(ve));
    }
    if (!rep.lambda) {
        rep.message = "no infinitesimal character with respect to h_(n): omega = " + rep.omega.str();
    } else if (rep.entries.empty()) {
        rep.message = "Dirac cohomology vanishes on the window; nothing to check";
    } else {
        rep.pass = std::all_of(rep.entries.begin(), rep.entries.end(), [](const VoganEntry& e) { return e.conjugate; });
        rep.message = rep.pass ? "lambda is Weyl-conjugate to mu + rho_k for every cohomology weight"
                               : "lambda is not Weyl-conjugate to mu + rho_k for some cohomology weight";
    }
    return rep;
}

}  // namespace famdirac
