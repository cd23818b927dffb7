#include <gtest/gtest.h>

#include <random>

#include "famdirac/expression.hpp"
#include "famdirac/laurent.hpp"
#include "famdirac/matrix.hpp"
#include "famdirac/smith.hpp"

using namespace famdirac;

namespace {

Poly P(const char* s) { return Poly::parse(s); }

Poly random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(-1, max_deg), coef(-3, 3);
    std::vector<Scalar> c;
    for (int k = 0, d = deg(rng); k <= d; ++k) c.emplace_back(coef(rng));
    return Poly(c);
}

PolyMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int max_deg) {
    PolyMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = random_poly(rng, max_deg);
    return m;
}

// gcd of all k x k minors, by brute force over row/column subsets.
Poly determinantal_divisor(const PolyMatrix& m, std::size_t k) {
    Poly g;
    std::vector<std::size_t> rows(k), cols(k);
    auto next = [](std::vector<std::size_t>& s, std::size_t n) {
        for (std::size_t i = s.size(); i-- > 0;) {
            if (s[i] + (s.size() - i) < n) {
                ++s[i];
                for (std::size_t j = i + 1; j < s.size(); ++j) s[j] = s[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < k; ++i) rows[i] = i;
    do {
        for (std::size_t i = 0; i < k; ++i) cols[i] = i;
        do {
            PolyMatrix sub(k, k);
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(rows[a], cols[b]);
            Poly d = determinant(sub);
            if (!d.is_zero()) g = g.is_zero() ? d.monic() : poly_gcd(g, d);
        } while (next(cols, m.cols()));
    } while (next(rows, m.rows()));
    return g;
}

}  // namespace

TEST(Scalar, GaussianArithmetic) {
    Scalar i = Scalar::imaginary_unit();
    EXPECT_EQ(i * i, Scalar(-1));
    EXPECT_EQ(Scalar::parse("1/2+3/4*i"), Scalar(mpq_class(1, 2), mpq_class(3, 4)));
    EXPECT_EQ((Scalar(1) + i).inverse(), Scalar(mpq_class(1, 2), mpq_class(-1, 2)));
    EXPECT_EQ(Scalar::parse(Scalar(mpq_class(-7, 3), mpq_class(5)).str()), Scalar(mpq_class(-7, 3), mpq_class(5)));
    auto root = Scalar(0, 2).sqrt();
    ASSERT_TRUE(root);
    EXPECT_EQ(*root * *root, Scalar(0, 2));
    EXPECT_FALSE(Scalar(2).sqrt());
}

TEST(Poly, ParseAndPrint) {
    EXPECT_EQ(P("t^2/8 - t"), Poly({Scalar(0), Scalar(-1), Scalar::rational(1, 8)}));
    EXPECT_EQ(P(P("1/8*t^2 - t").str().c_str()), P("t^2/8 - t"));
    EXPECT_EQ(P("(t+1)^3"), P("t^3 + 3t^2 + 3t + 1"));
    EXPECT_EQ(P("i*t"), Poly::monomial(Scalar::imaginary_unit(), 1));
    EXPECT_THROW(P("n + t"), InvalidInput);
    EXPECT_THROW(P("t/t"), InvalidInput);
}

TEST(Poly, DivisionAndGcd) {
    auto [q, r] = poly_divmod(P("t^3 - 1"), P("t - 1"));
    EXPECT_EQ(q, P("t^2 + t + 1"));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(poly_gcd(P("2t^2 - 2"), P("t^2 + 2t + 1")), P("t + 1"));
    EXPECT_THROW(poly_gcd(Poly(), Poly()), DomainError);
    EXPECT_THROW(poly_divmod(P("t"), Poly()), DomainError);
    EXPECT_THROW(exact_div(P("t"), P("t + 1")), DomainError);
    EXPECT_EQ(*poly_sqrt(P("t^4/4 + t^3 + t^2")), P("t^2/2 + t"));
    EXPECT_FALSE(poly_sqrt(P("t^2 + 1")));
}

TEST(Poly, RandomRingAxioms) {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        Poly a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 3);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        if (!b.is_zero()) {
            auto [q, r] = poly_divmod(a, b);
            EXPECT_EQ(q * b + r, a);
            EXPECT_LT(r.degree(), b.degree());
            EXPECT_EQ(exact_div(a * b, b), a);
        }
        Scalar x(trial % 7 - 3);
        EXPECT_EQ((a * b).eval(x), a.eval(x) * b.eval(x));
    }
}

TEST(Expression, TwoVariables) {
    BiPoly a = parse_expression("t/2*(3 - n)");
    EXPECT_EQ(a.at(1), P("t"));
    EXPECT_EQ(a.at(5), P("-t"));
    EXPECT_EQ(parse_expression(a.str()), a);
    EXPECT_EQ(parse_expression("t^2/8*n*(n - 2)").at(4), P("t^2"));
    EXPECT_EQ(parse_expression("2n t"), BiPoly::n() * BiPoly(P("2t")));
    EXPECT_THROW(parse_expression("t/n"), InvalidInput);
    EXPECT_THROW(parse_expression("t^"), InvalidInput);
    EXPECT_THROW(parse_expression("x + 1"), InvalidInput);
}

TEST(Laurent, UnitsAndDivision) {
    Laurent u = Laurent::monomial(Scalar(3), -2);
    EXPECT_TRUE(u.is_unit());
    EXPECT_EQ(u * u.inverse(), Laurent(1));
    EXPECT_EQ(Laurent(P("t^3 + t^2")), Laurent(2, P("t + 1")));
    EXPECT_EQ(exact_div(Laurent(P("t^2 - t")), Laurent(P("t - 1"))), Laurent(P("t")));
    EXPECT_THROW(Laurent(P("t + 1")).inverse(), DomainError);
    EXPECT_FALSE(u.is_polynomial());
    EXPECT_THROW(u.to_poly(), DomainError);
    EXPECT_EQ(u.pow(-1), Laurent::monomial(Scalar::rational(1, 3), 2));
}

TEST(Smith, KnownDiagonal) {
    PolyMatrix m{{P("t"), P("0")}, {P("0"), P("t^2 - t")}};
    auto r = smith_normal_form(m);
    ASSERT_EQ(r.rank(), 2u);
    EXPECT_EQ(r.invariant_factors[0], P("t"));
    EXPECT_EQ(r.invariant_factors[1], P("t^2 - t"));
    PolyMatrix coprime{{P("t"), P("0")}, {P("0"), P("t + 1")}};
    auto c = smith_normal_form(coprime);
    EXPECT_EQ(c.invariant_factors[0], P("1"));
    EXPECT_EQ(c.invariant_factors[1], P("t^2 + t"));
}

TEST(Smith, RandomAgainstDeterminantalDivisors) {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + trial % 3, cols = 1 + (trial / 3) % 3;
        PolyMatrix m = random_matrix(rng, rows, cols, 2);
        auto r = smith_normal_form(m);
        EXPECT_EQ(r.u * m * r.v, r.s);
        EXPECT_TRUE(determinant(r.u).is_unit());
        EXPECT_TRUE(determinant(r.v).is_unit());
        Poly prev(1);
        for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
            Poly dk = determinantal_divisor(m, k);
            if (dk.is_zero()) {
                EXPECT_EQ(r.rank(), k - 1);
                break;
            }
            ASSERT_GE(r.rank(), k);
            EXPECT_EQ(r.invariant_factors[k - 1], exact_div(dk, prev));
            prev = dk;
        }
        PolyMatrix ker = kernel_basis(m);
        EXPECT_EQ(ker.cols(), cols - r.rank());
        EXPECT_TRUE((m * ker).is_zero());
    }
}

TEST(Smith, QuotientDecomposition) {
    PolyMatrix sub{{P("t^2")}, {P("0")}};
    auto q = quotient_decomposition(2, sub);
    ASSERT_EQ(q.size(), 2u);
    EXPECT_EQ(q[0], (QuotientFactor{false, P("t^2")}));
    EXPECT_TRUE(q[1].free);
    EXPECT_TRUE(quotient_decomposition(1, PolyMatrix{{P("t + 1")}}).at(0).torsion == P("t + 1"));
    EXPECT_EQ(quotient_decomposition(2, PolyMatrix(2, 0)).size(), 2u);
    // Over K[t,1/t] the t-power torsion disappears.
    EXPECT_TRUE(quotient_decomposition(1, localize(PolyMatrix{{P("t^2")}})).empty());
}

TEST(Smith, UnimodularInverse) {
    PolyMatrix m{{P("1"), P("t")}, {P("0"), P("1")}};
    auto inv = unimodular_inverse(m);
    ASSERT_TRUE(inv);
    EXPECT_EQ(m * *inv, PolyMatrix::identity(2));
    EXPECT_FALSE(unimodular_inverse(PolyMatrix{{P("t")}}));
    auto linv = unimodular_inverse(localize(PolyMatrix{{P("t")}}));
    ASSERT_TRUE(linv);
    EXPECT_EQ((*linv)(0, 0), Laurent::monomial(Scalar(1), -1));
}
