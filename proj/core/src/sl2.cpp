#include "famdirac/sl2.hpp"

namespace famdirac {

LieFamily sl2_constant_family() {
    enum : std::size_t { h, x, y };
    std::vector<BasisElement> basis{{"h", Parity::compact}, {"x", Parity::noncompact}, {"y", Parity::noncompact}};
    std::vector<BracketEntry<Poly>> brackets{
        {h, x, {{x, Poly(2)}}},
        {h, y, {{y, Poly(-2)}}},
        {x, y, {{h, Poly(1)}}},
    };
    PolyMatrix form{{Poly(8), Poly(0), Poly(0)}, {Poly(0), Poly(0), Poly(4)}, {Poly(0), Poly(4), Poly(0)}};
    CartanData cartan{{y}, {h}, {x}, {h}, {}};
    std::vector<ScalarMatrix> weyl{ScalarMatrix{{Scalar(1)}}, ScalarMatrix{{Scalar(-1)}}};
    IsotropicSplit split{{y}, {x}, {}};
    return LieFamily(std::move(basis), brackets, 0, std::move(form), cartan, std::move(weyl), split);
}

LieFamily sl2_family(long n) { return build_deformation_family(sl2_constant_family(), n); }

}  // namespace famdirac

namespace famdirac {

QuadraticSpaceFamily sl2_quadratic_space(long n) { return rescaled_form(sl2_family(n)); }

LadderModule make_ladder(LadderKind kind, long m, long n_deform, const Scalar& c) {
    if (n_deform < 0) throw InvalidInput("bad_parameters", "deformation degree must be non-negative");
    const bool ray = kind == LadderKind::ray_up || kind == LadderKind::ray_down;
    if (ray && m < 1) throw InvalidInput("bad_parameters", "discrete series ladders need m >= 1");
    if (kind == LadderKind::finite && m < 0) throw InvalidInput("bad_parameters", "finite ladders need m >= 0");

    const BiPoly s(Poly::monomial(Scalar(mpq_class(1, 2)), static_cast<std::size_t>(n_deform)));
    const BiPoly n = BiPoly::n();
    auto k = [](const Scalar& v) { return BiPoly(Poly(v)); };
    LadderModule out{kind, 0, {}, {}};
    switch (kind) {
        case LadderKind::ray_up:
            out.m = m;
            out.a = s * (k(m - 2) - n);
            out.b = s * (n + k(m));
            break;
        case LadderKind::ray_down:
            out.m = m;
            out.a = s * (k(-m) - n);
            out.b = s * (n + k(2 - m));
            break;
        case LadderKind::finite:
            out.m = m;
            out.a = s * (k(m) - n);
            out.b = s * (n + k(m + 2));
            break;
        case LadderKind::lattice_even:
        case LadderKind::lattice_odd:
            out.a = s * (k(c - Scalar(1)) - n);
            out.b = s * (n + k(c + Scalar(1)));
            break;
    }
    return out;
}

}  // namespace famdirac
