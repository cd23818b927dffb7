#include <gtest/gtest.h>

#include <random>

#include "famdirac/enveloping.hpp"
#include "fixtures.hpp"

using namespace famdirac;
using namespace fixtures;

namespace {

struct Sl2 {
    LieFamily g;
    UEElement h, x, y, one;
    explicit Sl2(long n = 1)
        : g(sl2_family(n)), h(ue_generator(g, 0)), x(ue_generator(g, 1)), y(ue_generator(g, 2)), one(ue_scalar(g, Poly(1))) {}
    UEElement mul(const UEElement& a, const UEElement& b) const { return ue_mul(a, b, g); }
};

UEElement random_element(std::mt19937& rng, const LieFamily& fam, unsigned max_deg) {
    std::uniform_int_distribution<int> coef(-2, 2), nterms(1, 3), deg(0, static_cast<int>(max_deg));
    std::uniform_int_distribution<std::size_t> gen(0, fam.dim() - 1);
    PbwRing<Poly> ring(fam);
    UEElement out;
    for (int k = nterms(rng); k > 0; --k) {
        UEElement term = ue_scalar(fam, Poly({Scalar(coef(rng)), Scalar(coef(rng))}));
        for (int d = deg(rng); d > 0; --d) term = ring.mul(term, ue_generator(fam, gen(rng)));
        out += term;
    }
    return out;
}

}  // namespace

TEST(Enveloping, CommutatorAndNormalOrder) {
    Sl2 s;
    EXPECT_EQ(s.mul(s.x, s.y) - s.mul(s.y, s.x), s.h * P("t^2"));
    EXPECT_EQ(s.mul(s.one, s.x), s.x);
    // Normal form puts y (n-) before h before x (n+).
    UEElement xy = s.mul(s.x, s.y);
    EXPECT_EQ(xy.size(), 2u);
    EXPECT_EQ(s.mul(s.mul(s.h, s.x), s.y), s.mul(s.h, s.mul(s.x, s.y)));
}

TEST(Enveloping, CasimirSl2) {
    Sl2 s;
    UEElement omega = casimir(s.g);
    UEElement paper = s.mul(s.h, s.h) * P("t^2/8") + s.mul(s.x, s.y) * P("1/4") + s.mul(s.y, s.x) * P("1/4");
    EXPECT_EQ(omega, paper);
    UEElement normal = s.mul(s.h, s.h) * P("t^2/8") + s.h * P("t^2/4") + s.mul(s.y, s.x) * P("1/2");
    EXPECT_EQ(omega, normal);
    EXPECT_EQ(casimir_decomposed(s.g), omega);
    for (const auto& b : {s.h, s.x, s.y}) EXPECT_EQ(s.mul(omega, b), s.mul(b, omega));
}

TEST(Enveloping, CasimirOtherFamilies) {
    LieFamily ab = abelian_identity(3);
    UEElement expect;
    for (std::size_t i = 0; i < 3; ++i) expect += ue_mul(ue_generator(ab, i), ue_generator(ab, i), ab);
    EXPECT_EQ(casimir(ab), expect);
    for (long n : {0, 1, 2}) {
        LieFamily g = build_deformation_family(sl2_pair_constant(), n);
        UEElement omega = casimir(g);
        EXPECT_EQ(casimir_decomposed(g), omega);
        for (std::size_t i = 0; i < g.dim(); ++i)
            EXPECT_EQ(ue_mul(omega, ue_generator(g, i), g), ue_mul(ue_generator(g, i), omega, g));
    }
    EXPECT_THROW(casimir(heisenberg()), DomainError);
}

TEST(Enveloping, HarishChandra) {
    Sl2 s;
    UEElement omega = casimir(s.g);
    UEElement h2 = s.mul(s.h, s.h);
    EXPECT_EQ(hc_project(omega, s.g), h2 * P("t^2/8") + s.h * P("t^2/4"));
    EXPECT_EQ(hc_project(s.mul(s.y, s.h), s.g), UEElement());
    EXPECT_EQ(hc_project(h2, s.g), h2);
    UEElement target = (h2 - s.one) * P("t^2/8");
    EXPECT_EQ(hc_homomorphism(omega, s.g), target);
    EXPECT_EQ(hc_homomorphism(s.one, s.g), s.one);
    PbwRing<Poly> ring(s.g);
    for (unsigned k = 1; k <= 3; ++k)
        EXPECT_EQ(hc_homomorphism(ring.pow(omega, k), s.g), ring.pow(target, k));
    // h alone is not Weyl invariant after the twist.
    EXPECT_THROW(hc_homomorphism(s.h, s.g), DomainError);
}

TEST(Enveloping, HcSubfamily) {
    Sl2 s;
    EXPECT_TRUE(hc_subfamily_check(casimir(s.g), s.g));
    LieFamily a = abelian_a();
    UEElement ea = ue_generator(a, 0);
    EXPECT_TRUE(hc_subfamily_check(ea, a, 0));
    EXPECT_FALSE(hc_subfamily_check(ea, a, 1));
    EXPECT_TRUE(hc_subfamily_check(ea * P("t"), a, 1));
    EXPECT_FALSE(hc_subfamily_check(ue_mul(ea, ea, a) * P("t"), a, 1));
    EXPECT_TRUE(hc_subfamily_check(ue_mul(ea, ea, a) * P("t^2"), a, 1));
}

TEST(Enveloping, InfinitesimalCharacterFromScalar) {
    LieFamily g = sl2_family(1);
    for (long m : {1, 2, 5}) {
        Poly omega = P("t^2/8") * Poly(m * (m + 2));
        auto ic = infinitesimal_character_from_casimir_scalar(omega, g);
        ASSERT_TRUE(ic);
        EXPECT_EQ(ic->values, std::vector<Poly>{Poly(m + 1)});
    }
    EXPECT_EQ(infinitesimal_character_from_casimir_scalar(P("-t^2/8"), g)->values, std::vector<Poly>{Poly()});
    EXPECT_EQ(infinitesimal_character_from_casimir_scalar(P("t^2/8*(t^2 - 1)"), g)->values, std::vector<Poly>{P("t")});
    EXPECT_FALSE(infinitesimal_character_from_casimir_scalar(P("t^2/8"), g));
    EXPECT_THROW(infinitesimal_character_from_casimir_scalar(P("t"), g), DomainError);
    EXPECT_EQ(canonical_character({P("-3")}, g).values, std::vector<Poly>{P("3")});
    EXPECT_EQ(canonical_character({P("t - 2")}, g).values, std::vector<Poly>{P("-t + 2")});
    EXPECT_TRUE(weyl_conjugate({P("2")}, {P("-2")}, g));
}

TEST(Enveloping, VermaFamily) {
    LieFamily g = sl2_family(1);
    for (long c : {0, 1, 5, -3}) {
        VermaReport rep = verma_report(g, {Poly(c)}, 4);
        EXPECT_TRUE(rep.quasi_simple);
        EXPECT_TRUE(rep.hc_consistent);
        EXPECT_EQ(rep.casimir_scalar, P("t^2/8") * Poly(c * (c + 2)));
        EXPECT_EQ(rep.lambda_plus_rho, canonical_character({Poly(c + 1)}, g));
        ASSERT_TRUE(rep.extracted);
        EXPECT_EQ(*rep.extracted, rep.lambda_plus_rho);
    }
    VermaModule v = verma_family(g, {Poly(2)}, 3);
    EXPECT_EQ(v.basis.size(), 4u);
    EXPECT_EQ(verma_report(g, {Poly(-1)}, 2).lambda_plus_rho.values, std::vector<Poly>{Poly()});
    EXPECT_THROW(verma_family(abelian_a(), {Poly(1)}, 2), DomainError);
    // Generic weight: lambda = t gives infinitesimal character t + 1.
    VermaReport gen = verma_report(g, {P("t")}, 3);
    EXPECT_TRUE(gen.quasi_simple);
    EXPECT_EQ(gen.lambda_plus_rho.values, std::vector<Poly>{P("t + 1")});
}

TEST(Enveloping, VermaRankTwo) {
    LieFamily g = build_deformation_family(sl2_pair_constant(), 1);
    VermaReport rep = verma_report(g, {Poly(1), Poly(2)}, 2);
    EXPECT_TRUE(rep.quasi_simple);
    EXPECT_TRUE(rep.hc_consistent);
    EXPECT_FALSE(rep.extracted);
}

TEST(Enveloping, PbwAssociativityRandom) {
    std::mt19937 rng(7);
    std::vector<LieFamily> fams{sl2_family(1), heisenberg()};
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const LieFamily& f = fams[trial % 2];
        PbwRing<Poly> ring(f);
        UEElement a = random_element(rng, f, 3), b = random_element(rng, f, 3), c = random_element(rng, f, 3);
        EXPECT_EQ(ring.mul(ring.mul(a, b), c), ring.mul(a, ring.mul(b, c)));
        EXPECT_EQ(ring.mul(a, b + c), ring.mul(a, b) + ring.mul(a, c));
        ++checked;
    }
    EXPECT_GE(checked, 100);
}

TEST(Enveloping, ExponentRoundTrip) {
    LieFamily g = sl2_family(1);
    UEElement e = ue_from_exponents(g, {1, 1, 0}, Poly(1));  // h x
    EXPECT_EQ(e, ue_mul(ue_generator(g, 0), ue_generator(g, 1), g));
    EXPECT_EQ(exponents_by_basis(g, e.terms().begin()->first), (std::vector<unsigned>{1, 1, 0}));
    UEElement xy = ue_from_exponents(g, {0, 1, 1}, Poly(1));  // x y, not normal
    EXPECT_EQ(xy.size(), 2u);
}
