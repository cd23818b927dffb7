#include <gtest/gtest.h>

#include <random>

#include "famdirac/json_io.hpp"
#include "famdirac/sl2.hpp"
#include "fixtures.hpp"

using namespace famdirac;
using namespace fixtures;

namespace {

std::string data(const char* name) { return std::string(FAMDIRAC_DATA_DIR) + "/" + name; }

template <class F>
std::string error_code(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

}  // namespace

TEST(JsonIo, Scalars) {
    EXPECT_EQ(to_json(Scalar(mpq_class(3, 4))), "3/4");
    EXPECT_EQ(to_json(Scalar(mpq_class(1, 2), mpq_class(-2))), "1/2-2*i");
    EXPECT_EQ(scalar_from_json(Json("1/2-2*i")), Scalar(mpq_class(1, 2), mpq_class(-2)));
    EXPECT_EQ(scalar_from_json(Json(7)), Scalar(7));
    EXPECT_EQ(error_code([] { scalar_from_json(Json(1.5)); }), "bad_json");
}

TEST(JsonIo, Polys) {
    Poly p = P("t^2/8 - 1");
    EXPECT_EQ(to_json(p), Json::parse(R"(["-1", "0", "1/8"])"));
    EXPECT_EQ(poly_from_json(to_json(p)), p);
    EXPECT_EQ(poly_from_json(Json("t^2/8 - 1")), p);
    EXPECT_EQ(poly_from_json(Json(3)), Poly(3));
    EXPECT_EQ(to_json(Poly()), Json::array());
    Laurent l(-2, P("1 + t"));
    EXPECT_EQ(laurent_from_json(to_json(l)), l);
}

TEST(JsonIo, FamilyRoundTrip) {
    for (const LieFamily& g : {sl2_family(0), sl2_family(2), sl2_pair_constant(), su2_constant(), heisenberg()}) {
        LieFamily back = family_from_json(Json::parse(to_json(g).dump()));
        EXPECT_EQ(back, g);
    }
}

TEST(JsonIo, FamilyByLabels) {
    Json j = Json::parse(R"({
      "basis": [{"label": "h", "type": "compact"}, {"label": "x", "type": "noncompact"},
                {"label": "y", "type": "noncompact"}],
      "structure": [["h", "x", [["x", "2"]]], ["h", "y", [["y", "-2"]]], ["x", "y", [["h", "t^2"]]]],
      "n": 1,
      "form": [["8", "0", "0"], ["0", "0", "4*t^2"], ["0", "4*t^2", "0"]],
      "cartan": {"n_minus": ["y"], "h": ["h"], "n_plus": ["x"], "t": ["h"], "a": []},
      "weyl": [[["1"]], [[-1]]],
      "isotropic": {"minus": ["y"], "plus": ["x"]}
    })");
    EXPECT_EQ(family_from_json(j), sl2_family(1));
}

TEST(JsonIo, FamilyErrors) {
    EXPECT_EQ(error_code([] { family_from_json(Json::parse(R"({"basis": []})")); }), "bad_json");
    EXPECT_EQ(error_code([] {
                  family_from_json(Json::parse(R"({"basis": [{"label": "a", "type": "weird"}], "form": [["1"]]})"));
              }),
              "bad_json");
    EXPECT_EQ(error_code([] {
                  family_from_json(Json::parse(
                      R"({"basis": [{"label": "a", "type": "compact"}], "structure": [["a", "b", []]], "form": [["1"]]})"));
              }),
              "bad_json");
    EXPECT_EQ(error_code([] { read_json_file(data("does_not_exist.json")); }), "io_error");
}

TEST(JsonIo, DataFilesMatchPresets) {
    EXPECT_EQ(family_from_json(read_json_file(data("sl2.json"))), sl2_family(0));
    EXPECT_EQ(family_from_json(read_json_file(data("sl2_d.json"))), sl2_family(1));
    EXPECT_EQ(ladder_from_json(read_json_file(data("ds_plus_3.json"))), make_ladder(LadderKind::ray_up, 3));
    EXPECT_EQ(ladder_from_json(read_json_file(data("f_2.json"))), make_ladder(LadderKind::finite, 2));
    EXPECT_EQ(ladder_from_json(read_json_file(data("ps_odd.json"))), make_ladder(LadderKind::lattice_odd, 0));
}

TEST(JsonIo, UeRoundTrip) {
    LieFamily g = sl2_family(1);
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> ex(0, 3), co(-4, 4);
    for (int k = 0; k < 20; ++k) {
        UEElement u;
        for (int j = 0; j < 3; ++j)
            u += ue_from_exponents(g, {unsigned(ex(rng)), unsigned(ex(rng)), unsigned(ex(rng))}, Poly(co(rng)));
        EXPECT_EQ(ue_from_json(Json::parse(to_json(u, g).dump()), g), u);
    }
    // Declaration order (h, x, y), not PBW order.
    EXPECT_EQ(to_json(ue_generator(g, 1), g), Json::parse(R"([[[0, 1, 0], ["1"]]])"));
    UEElement xy = ue_from_json(read_json_file(data("sample_element.json")), g);
    // Exponents name the PBW monomial (order y, h, x), so [0,1,1] is y*x.
    EXPECT_EQ(xy, ue_mul(ue_generator(g, 2), ue_generator(g, 1), g) +
                      ue_mul(ue_generator(g, 0), ue_generator(g, 0), g) * P("1/2"));
}

TEST(JsonIo, CliffordAndARoundTrip) {
    LieFamily g = sl2_family(1);
    QuadraticSpaceFamily q = rescaled_form(g);
    CliffordElement c = cl_mul(cl_gamma(q, 0), cl_gamma(q, 1), q) + cl_scalar(P("t"));
    EXPECT_EQ(clifford_from_json(to_json(c)), c);
    AElement d = dirac_element(g, q);
    EXPECT_EQ(a_from_json(Json::parse(to_json(d, g).dump()), g), d);
    EXPECT_EQ(render(d, g, q), "1/4*x (x) g(y) + 1/4*y (x) g(x)");
}

TEST(JsonIo, LadderJson) {
    LadderModule v = make_ladder(LadderKind::ray_down, 4);
    EXPECT_EQ(ladder_from_json(to_json(v)), v);
    Json j = Json::parse(R"j({"kind": "finite", "m": 1, "A": "t/2·(1 − n)", "B": "t/2*(n+3)"})j");
    EXPECT_EQ(ladder_from_json(j), make_ladder(LadderKind::finite, 1));
    EXPECT_EQ(error_code([] { ladder_from_json(Json::parse(R"({"kind": "spiral", "A": "1", "B": "1"})")); }),
              "bad_ladder");
    EXPECT_EQ(error_code([] { ladder_from_json(Json::parse(R"({"kind": "finite", "m": 1, "A": "t"})")); }), "bad_json");
}

TEST(JsonIo, ReportShapes) {
    LieFamily g = sl2_family(1);
    QuadraticSpaceFamily q = rescaled_form(g);
    LadderModule v = make_ladder(LadderKind::ray_up, 2);
    Json r = to_json(dirac_cohomology(v, g, q, default_window(v)));
    ASSERT_TRUE(r.is_array());
    EXPECT_EQ(r[0]["weight"], 1);
    EXPECT_EQ(r[0]["free_rank"], 1);
    EXPECT_TRUE(r[0]["torsion"].empty());
    Json vg = to_json(vogan_check(make_ladder(LadderKind::finite, 2), g, q));
    EXPECT_EQ(vg["pass"], true);
    EXPECT_EQ(vg["lambda"]["h"], Json::parse(R"(["3"])"));
}
