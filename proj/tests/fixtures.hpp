#pragma once

#include "famdirac/lie_family.hpp"
#include "famdirac/sl2.hpp"

namespace fixtures {

using namespace famdirac;

inline Poly P(const char* s) { return Poly::parse(s); }

/// Two commuting copies of sl2 (h1,x1,y1,h2,x2,y2), block Killing forms.
inline LieFamily sl2_pair_constant() {
    std::vector<BasisElement> basis;
    std::vector<BracketEntry<Poly>> br;
    PolyMatrix form(6, 6);
    CartanData cd;
    IsotropicSplit iso;
    for (std::size_t c = 0; c < 2; ++c) {
        std::size_t h = 3 * c, x = h + 1, y = h + 2;
        std::string s = std::to_string(c + 1);
        basis.push_back({"h" + s, Parity::compact});
        basis.push_back({"x" + s, Parity::noncompact});
        basis.push_back({"y" + s, Parity::noncompact});
        br.push_back({h, x, {{x, Poly(2)}}});
        br.push_back({h, y, {{y, Poly(-2)}}});
        br.push_back({x, y, {{h, Poly(1)}}});
        form(h, h) = 8;
        form(x, y) = form(y, x) = 4;
        cd.n_minus.push_back(y);
        cd.h.push_back(h);
        cd.t.push_back(h);
        cd.n_plus.push_back(x);
        iso.minus.push_back(y);
        iso.plus.push_back(x);
    }
    std::vector<ScalarMatrix> weyl;
    for (int a : {1, -1})
        for (int b : {1, -1}) weyl.push_back(ScalarMatrix{{Scalar(a), Scalar(0)}, {Scalar(0), Scalar(b)}});
    return LieFamily(basis, br, 0, form, cd, weyl, iso);
}

/// su(2) as a purely compact family: p = 0.
inline LieFamily su2_constant() {
    std::vector<BasisElement> basis{{"a", Parity::compact}, {"b", Parity::compact}, {"c", Parity::compact}};
    std::vector<BracketEntry<Poly>> br{{0, 1, {{2, Poly(1)}}}, {1, 2, {{0, Poly(1)}}}, {2, 0, {{1, Poly(1)}}}};
    PolyMatrix form{{Poly(-2), Poly(0), Poly(0)}, {Poly(0), Poly(-2), Poly(0)}, {Poly(0), Poly(0), Poly(-2)}};
    return LieFamily(basis, br, 0, form);
}

/// Heisenberg family [x,y] = t z with z compact; no invariant form.
inline LieFamily heisenberg() {
    std::vector<BasisElement> basis{{"x", Parity::noncompact}, {"y", Parity::noncompact}, {"z", Parity::compact}};
    std::vector<BracketEntry<Poly>> br{{0, 1, {{2, P("t")}}}};
    return LieFamily(basis, br, 0, PolyMatrix(3, 3));
}

/// One-dimensional noncompact abelian family: h = a.
inline LieFamily abelian_a() {
    std::vector<BasisElement> basis{{"a", Parity::noncompact}};
    CartanData cd{{}, {0}, {}, {}, {0}};
    return LieFamily(basis, {}, 0, PolyMatrix{{Poly(2)}}, cd, {ScalarMatrix{{Scalar(1)}}}, IsotropicSplit{{}, {}, {0}});
}

/// Abelian family with the identity form (all compact).
inline LieFamily abelian_identity(std::size_t n) {
    std::vector<BasisElement> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back({"e" + std::to_string(i), Parity::compact});
    return LieFamily(basis, {}, 0, PolyMatrix::identity(n));
}

}  // namespace fixtures
