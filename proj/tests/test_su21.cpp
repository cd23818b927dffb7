// Rank-two checks on su(2,1), loaded from the data directory.
#include <gtest/gtest.h>

#include "famdirac/json_io.hpp"
#include "fixtures.hpp"

using namespace famdirac;
using namespace fixtures;

namespace {

LieFamily su21(long n) {
    LieFamily base = family_from_json(read_json_file(std::string(FAMDIRAC_DATA_DIR) + "/su21.json"));
    return build_deformation_family(base, n);
}

}  // namespace

TEST(Su21, Validates) {
    for (long n = 0; n <= 2; ++n) EXPECT_TRUE(validate_family(su21(n)).empty()) << n;
    EXPECT_EQ(su21(0).weyl().size(), 6u);
}

TEST(Su21, BuiltFileMatches) {
    EXPECT_EQ(family_from_json(read_json_file(std::string(FAMDIRAC_DATA_DIR) + "/su21_n1.json")), su21(1));
}

TEST(Su21, RhoData) {
    RhoData rd = compute_rho_data(su21(0));
    EXPECT_EQ(rd.rho, (std::vector<Scalar>{Scalar(1), Scalar(1)}));
    // rho_k = half the root e1 - e2 of k.
    EXPECT_EQ(rd.rho_k, (std::vector<Scalar>{Scalar(1), Scalar(mpq_class(-1, 2))}));
    EXPECT_EQ(rd.rho_norm_sq, Scalar(2));
    EXPECT_EQ(rd.rho_k_norm_sq, Scalar(mpq_class(1, 2)));
}

TEST(Su21, CasimirIsCentral) {
    LieFamily g = su21(1);
    PbwRing<Poly> ring(g);
    UEElement om = casimir(g);
    EXPECT_EQ(om, casimir_decomposed(g));
    for (std::size_t i = 0; i < g.dim(); ++i) EXPECT_TRUE(ring.bracket(om, ue_generator(g, i)).is_zero()) << i;
}

TEST(Su21, HarishChandraAgainstWeightNorms) {
    // HC(Omega)(mu) = r^2 (|mu|^2 - |rho|^2) with |a w1 + b w2|^2 = 2/3 (a^2 + ab + b^2).
    for (long n = 0; n <= 2; ++n) {
        LieFamily g = su21(n);
        UEElement h1 = ue_generator(g, 0), h2 = ue_generator(g, 1);
        UEElement quad = ue_mul(h1, h1, g) + ue_mul(h1, h2, g) + ue_mul(h2, h2, g);
        Poly r2 = P("t^2").pow(static_cast<unsigned>(n));
        UEElement expect = (quad * P("2/3") - ue_scalar(g, Poly(2))) * r2;
        EXPECT_EQ(hc_homomorphism(casimir(g), g), expect) << n;
        EXPECT_TRUE(hc_subfamily_check(casimir(g), g));
    }
}

TEST(Su21, DiracSquare) {
    for (long n = 0; n <= 2; ++n) {
        LieFamily g = su21(n);
        DiracSquareResult r = dirac_square_check(g, rescaled_form(g));
        EXPECT_TRUE(r.equal) << n;
        EXPECT_EQ(r.constant, P("3/2") * P("t^2").pow(static_cast<unsigned>(n)));
    }
}

TEST(Su21, Localization) {
    LieFamily g = su21(2);
    EXPECT_TRUE(psi_lie_check(g).empty());
    EXPECT_TRUE(localized_dirac_check(g, rescaled_form(g)).equal);
}

TEST(Su21, SpinWeights) {
    LieFamily g = su21(1);
    auto sw = spin_weights(g, rescaled_form(g));
    ASSERT_EQ(sw.size(), 4u);
    // The empty word carries half the sum of the p+ weights, shifted into the
    // spin-cover lattice; every weight of the spin module differs from it by
    // a sum of p- weights.
    for (const auto& w : sw) EXPECT_EQ(w.weight.size(), 2u);
    EXPECT_NE(sw[0].weight, sw[3].weight);
}

TEST(Su21, NotSl2ShapedForLadders) {
    EXPECT_THROW(require_sl2_shape(su21(1)), InvalidInput);
}
