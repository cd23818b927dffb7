#include <gtest/gtest.h>

#include "famdirac/lie_family.hpp"
#include "fixtures.hpp"

using namespace famdirac;
using namespace fixtures;

namespace {

bool has_code(const std::vector<Diagnostic>& d, const std::string& code) {
    for (const auto& x : d)
        if (x.code == code) return true;
    return false;
}

}  // namespace

TEST(LieFamily, Sl2DeformationBrackets) {
    LieFamily g = sl2_family(1);
    EXPECT_TRUE(validate_family(g).empty());
    EXPECT_EQ(g.r(), P("t"));
    std::size_t h = g.require_index("h"), x = g.require_index("x"), y = g.require_index("y");
    EXPECT_EQ(g.structure_constant(h, x, x), P("2"));
    EXPECT_EQ(g.structure_constant(h, y, y), P("-2"));
    EXPECT_EQ(g.structure_constant(x, y, h), P("t^2"));
    EXPECT_EQ(g.structure_constant(y, x, h), P("-t^2"));
    EXPECT_EQ(sl2_family(2).structure_constant(x, y, h), P("t^4"));
    EXPECT_EQ(sl2_family(0), sl2_constant_family());
}

TEST(LieFamily, RescaledForm) {
    for (long n : {0, 1, 2}) {
        LieFamily g = sl2_family(n);
        QuadraticSpaceFamily q = rescaled_form(g);
        EXPECT_EQ(q.form, (PolyMatrix{{P("0"), P("4")}, {P("4"), P("0")}}));
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                EXPECT_EQ(q.form(i, j) * g.r() * g.r(), g.form()(q.basis[i], q.basis[j]));
        EXPECT_EQ(q.iso_minus, std::vector<std::size_t>{1});
        EXPECT_EQ(q.iso_plus, std::vector<std::size_t>{0});
        EXPECT_TRUE(q.has_spin_split());
    }
}

TEST(LieFamily, RhoData) {
    RhoData rd = compute_rho_data(sl2_family(1));
    EXPECT_EQ(rd.rho, std::vector<Scalar>{Scalar(1)});
    EXPECT_EQ(rd.rho_k, std::vector<Scalar>{Scalar(0)});
    EXPECT_EQ(rd.rho_norm_sq, Scalar::rational(1, 8));
    EXPECT_EQ(rd.rho_k_norm_sq, Scalar(0));
    EXPECT_EQ(compute_rho_data(sl2_pair_constant()).rho_norm_sq, Scalar::rational(1, 4));
    RhoData ab = compute_rho_data(abelian_a());
    EXPECT_EQ(ab.rho_norm_sq, Scalar(0));
}

TEST(LieFamily, SpecializationFibers) {
    LieFamily g = sl2_family(1);
    std::size_t h = 0, x = 1, y = 2;
    EXPECT_EQ(specialize(g, Scalar(1)).structure_constant(x, y, h), P("1"));
    EXPECT_TRUE(specialize(g, Scalar(0)).bracket(x, y).empty());
    EXPECT_EQ(specialize(g, Scalar(0)).structure_constant(h, x, x), P("2"));
}

TEST(LieFamily, ConstantFamilyRoundTrip) {
    for (long n : {0, 1, 3}) EXPECT_EQ(constant_family(sl2_family(n)), sl2_constant_family());
}

TEST(LieFamily, ValidatorCatchesCorruption) {
    LieFamily g = sl2_constant_family();
    PolyMatrix bad_form = g.form();
    bad_form(0, 0) = 9;
    LieFamily f1(g.basis(), {{0, 1, {{1, Poly(2)}}}, {0, 2, {{2, Poly(-2)}}}, {1, 2, {{0, Poly(1)}}}}, 0, bad_form);
    EXPECT_TRUE(has_code(validate_family(f1), "form_invariance"));

    // [x,y] lands in p instead of k.
    LieFamily f2(g.basis(), {{0, 1, {{1, Poly(2)}}}, {0, 2, {{2, Poly(-2)}}}, {1, 2, {{1, Poly(1)}}}}, 0, g.form());
    auto d2 = validate_family(f2);
    EXPECT_TRUE(has_code(d2, "theta_automorphism"));

    std::vector<BasisElement> b3{{"a", Parity::compact}, {"b", Parity::compact}, {"c", Parity::compact}};
    LieFamily f3(b3, {{0, 1, {{2, Poly(1)}}}, {1, 2, {{0, Poly(1)}}}, {2, 0, {{2, Poly(1)}}}}, 0, PolyMatrix(3, 3));
    EXPECT_TRUE(has_code(validate_family(f3), "jacobi"));

    PolyMatrix asym = g.form();
    asym(0, 1) = 1;
    LieFamily f4(g.basis(), {{0, 1, {{1, Poly(2)}}}, {0, 2, {{2, Poly(-2)}}}, {1, 2, {{0, Poly(1)}}}}, 0, asym);
    auto d4 = validate_family(f4);
    EXPECT_TRUE(has_code(d4, "form_symmetry"));
    EXPECT_TRUE(has_code(d4, "form_theta_orthogonal"));

    EXPECT_THROW(build_deformation_family(f1, 1), InvariantViolation);
    EXPECT_THROW(build_deformation_family(sl2_family(1), 1), InvalidInput);
}

TEST(LieFamily, OtherFixturesValidate) {
    EXPECT_TRUE(validate_family(sl2_pair_constant()).empty());
    EXPECT_TRUE(validate_family(su2_constant()).empty());
    EXPECT_TRUE(validate_family(heisenberg()).empty());
    EXPECT_TRUE(validate_family(abelian_a()).empty());
    EXPECT_TRUE(validate_family(build_deformation_family(sl2_pair_constant(), 2)).empty());
}

TEST(LieFamily, MalformedInputRejected) {
    std::vector<BasisElement> b{{"a", Parity::compact}};
    EXPECT_THROW(LieFamily(b, {{0, 3, {}}}, 0, PolyMatrix(1, 1)), InvalidInput);
    EXPECT_THROW(LieFamily(b, {}, 0, PolyMatrix(2, 2)), InvalidInput);
    EXPECT_THROW(LieFamily({{"a", Parity::compact}, {"a", Parity::compact}}, {}, 0, PolyMatrix(2, 2)), InvalidInput);
    EXPECT_THROW(sl2_family(-1), InvalidInput);
}
