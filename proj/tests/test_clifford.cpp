#include <gtest/gtest.h>

#include <random>

#include "famdirac/clifford.hpp"
#include "famdirac/enveloping.hpp"
#include "fixtures.hpp"

using namespace famdirac;
using namespace fixtures;

namespace {

struct Sl2Cl {
    LieFamily g = sl2_family(1);
    QuadraticSpaceFamily q = rescaled_form(g);
    CliffordElement gx = cl_gamma(q, 0), gy = cl_gamma(q, 1), one = cl_scalar(Poly(1));
    CliffordElement mul(const CliffordElement& a, const CliffordElement& b) const { return cl_mul(a, b, q); }
};

PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b) { return a * b - b * a; }

}  // namespace

TEST(Clifford, Sl2Relations) {
    Sl2Cl s;
    EXPECT_EQ(s.mul(s.gx, s.gy) + s.mul(s.gy, s.gx), s.one * P("4"));
    EXPECT_TRUE(s.mul(s.gx, s.gx).is_zero());
    EXPECT_EQ(s.mul(s.mul(s.gx, s.gy), s.gx), s.gx * P("4"));
}

TEST(Clifford, AnticommutationAllPairs) {
    for (auto fam : {sl2_family(2), build_deformation_family(sl2_pair_constant(), 1)}) {
        QuadraticSpaceFamily q = rescaled_form(fam);
        for (std::size_t i = 0; i < q.dim(); ++i)
            for (std::size_t j = 0; j < q.dim(); ++j) {
                auto gi = cl_gamma(q, i), gj = cl_gamma(q, j);
                EXPECT_EQ(cl_mul(gi, gj, q) + cl_mul(gj, gi, q), cl_scalar(q.form(i, j)));
            }
    }
}

TEST(Clifford, SoFromPair) {
    Sl2Cl s;
    PolyMatrix r = so_from_pair(0, 1, s.q);
    EXPECT_EQ(r, (PolyMatrix{{P("4"), P("0")}, {P("0"), P("-4")}}));
    EXPECT_EQ(so_from_pair(1, 0, s.q), r * Poly(-1));
    EXPECT_TRUE(so_from_pair(0, 0, s.q).is_zero());
    EXPECT_TRUE(is_antisymmetric(r, s.q));
    EXPECT_FALSE(is_antisymmetric(PolyMatrix::identity(2), s.q));
    EXPECT_THROW(phi(PolyMatrix::identity(2), s.q), InvalidInput);
}

TEST(Clifford, PhiAndAlpha) {
    Sl2Cl s;
    CliffordElement a = alpha(s.g, s.q, 0);
    EXPECT_EQ(a, s.mul(s.gx, s.gy) * P("1/2") - s.one);
    EXPECT_TRUE(phi(PolyMatrix(2, 2), s.q).is_zero());
    EXPECT_EQ(cl_bracket(a, s.gx, s.q), s.gx * P("2"));
    EXPECT_EQ(cl_bracket(a, s.gy, s.q), s.gy * P("-2"));
    // phi(R_{x,y}) = 1/2 [g(x), g(y)]
    EXPECT_EQ(phi(so_from_pair(0, 1, s.q), s.q), cl_bracket(s.gx, s.gy, s.q) * P("1/2"));
}

TEST(Clifford, PhiIsLieHomomorphism) {
    LieFamily g = build_deformation_family(sl2_pair_constant(), 1);
    QuadraticSpaceFamily q = rescaled_form(g);
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::size_t> pos(0, q.dim() - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        PolyMatrix t(q.dim(), q.dim()), u(q.dim(), q.dim());
        for (int k = 0; k < 2; ++k) {
            t = t + so_from_pair(pos(rng), pos(rng), q) * Poly(coef(rng));
            u = u + so_from_pair(pos(rng), pos(rng), q) * Poly({Scalar(coef(rng)), Scalar(1)});
        }
        EXPECT_EQ(phi(commutator(t, u), q), cl_bracket(phi(t, q), phi(u, q), q));
    }
}

TEST(Clifford, AlphaIntertwinesGamma) {
    for (auto fam : {sl2_family(1), build_deformation_family(sl2_pair_constant(), 2)}) {
        QuadraticSpaceFamily q = rescaled_form(fam);
        for (std::size_t k : fam.compact_indices()) {
            CliffordElement a = alpha(fam, q, k);
            PolyMatrix ad = ad_on_p(fam, k);
            for (std::size_t v = 0; v < q.dim(); ++v) {
                CliffordElement expect;
                for (std::size_t i = 0; i < q.dim(); ++i) expect += cl_gamma(q, i) * ad(i, v);
                EXPECT_EQ(cl_bracket(a, cl_gamma(q, v), q), expect);
            }
            for (std::size_t l : fam.compact_indices()) {
                CliffordElement expect;
                for (const auto& [m, c] : fam.bracket(k, l)) expect += alpha(fam, q, m) * c;
                EXPECT_EQ(cl_bracket(a, alpha(fam, q, l), q), expect);
            }
        }
    }
}

TEST(Clifford, AlphaIsConstantAlongFamily) {
    // alpha is t-independent in the family basis for every n.
    for (long n : {0, 1, 2}) {
        LieFamily g = sl2_family(n);
        EXPECT_EQ(alpha(g, rescaled_form(g), 0), alpha(sl2_family(0), rescaled_form(sl2_family(0)), 0));
    }
}

TEST(Clifford, RestrictionLemma) {
    // Conjugating the constant-fiber operator ad(h)|p by T_r (multiplication
    // by r on p) equals the restriction of the extended operator to r p.
    LieFamily c = sl2_constant_family();
    for (long n : {1, 2}) {
        LieFamily g = sl2_family(n);
        PolyMatrix tr = PolyMatrix::identity(2) * g.r();
        PolyMatrix lhs = tr * ad_on_p(c, 0);
        PolyMatrix rhs = ad_on_p(g, 0) * tr;
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(Clifford, SpinModuleSl2) {
    Sl2Cl s;
    SpinVector one(0, Poly(1)), y(word_from_indices({1}), Poly(1));
    EXPECT_EQ(spin_act(s.gx, y, s.q), one * P("4"));
    EXPECT_EQ(spin_act(s.gy, one, s.q), y);
    EXPECT_TRUE(spin_act(s.gx, one, s.q).is_zero());
    EXPECT_TRUE(spin_act(s.gy, y, s.q).is_zero());
    EXPECT_EQ(spin_act(s.one, y, s.q), y);
    CliffordElement anti = s.mul(s.gx, s.gy) + s.mul(s.gy, s.gx);
    for (const auto& v : {one, y}) EXPECT_EQ(spin_act(anti, v, s.q), v * P("4"));
    auto w = spin_weights(s.g, s.q);
    ASSERT_EQ(w.size(), 2u);
    EXPECT_EQ(w[0].weight, std::vector<Scalar>{Scalar(1)});
    EXPECT_EQ(w[0].word, 0u);
    EXPECT_EQ(w[1].weight, std::vector<Scalar>{Scalar(-1)});
    EXPECT_EQ(word_label(w[1].word, s.q), "y");
}

TEST(Clifford, SpinActFactorsThroughProduct) {
    LieFamily g = build_deformation_family(sl2_pair_constant(), 1);
    QuadraticSpaceFamily q = rescaled_form(g);
    std::mt19937 rng(5);
    std::uniform_int_distribution<CliffordWord> word(0, 15);
    std::uniform_int_distribution<int> coef(-2, 2);
    auto basis = spin_basis(q);
    for (int trial = 0; trial < 50; ++trial) {
        CliffordElement a, b;
        for (int k = 0; k < 3; ++k) {
            a.add(word(rng), Poly(coef(rng)));
            b.add(word(rng), Poly({Scalar(coef(rng)), Scalar(coef(rng))}));
        }
        for (CliffordWord sw : basis) {
            SpinVector s(sw, Poly(1));
            EXPECT_EQ(spin_act(cl_mul(a, b, q), s, q), spin_act(a, spin_act(b, s, q), q));
        }
    }
    auto weights = spin_weights(g, q);
    ASSERT_EQ(weights.size(), 4u);
    std::vector<std::vector<Scalar>> got;
    for (const auto& w : weights) got.push_back(w.weight);
    std::vector<std::vector<Scalar>> expect{{Scalar(1), Scalar(1)}, {Scalar(-1), Scalar(1)}, {Scalar(1), Scalar(-1)}, {Scalar(-1), Scalar(-1)}};
    EXPECT_EQ(got, expect);
}

TEST(Clifford, OddRank) {
    LieFamily a = abelian_a();
    for (int eps : {1, -1}) {
        QuadraticSpaceFamily q = rescaled_form(a, eps);
        CliffordElement e0 = cl_gamma(q, 0);
        EXPECT_EQ(cl_mul(e0, e0, q), cl_scalar(Poly(1)));
        SpinVector one(0, Poly(1));
        EXPECT_EQ(spin_act(e0, one, q), one * Poly(eps));
        EXPECT_EQ(spin_act(cl_mul(e0, e0, q), one, q), one);
    }
    auto w = spin_weights(a, rescaled_form(a));
    ASSERT_EQ(w.size(), 1u);
    EXPECT_TRUE(w[0].weight.empty());
}

TEST(Clifford, RankZero) {
    LieFamily su2 = su2_constant();
    QuadraticSpaceFamily q = rescaled_form(su2);
    EXPECT_EQ(q.dim(), 0u);
    EXPECT_EQ(spin_basis(q), std::vector<CliffordWord>{0});
    EXPECT_TRUE(alpha(su2, q, 0).is_zero());
}
