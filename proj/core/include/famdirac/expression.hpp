#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "famdirac/poly.hpp"

namespace famdirac {

/// Polynomial in two variables (n, t) with Q(i) coefficients, stored as a
/// list of t-polynomials indexed by the power of n. Used for the ladder
/// transition coefficients A_n(t), B_n(t).
class BiPoly {
public:
    BiPoly() = default;
    BiPoly(Poly p);  // NOLINT(google-explicit-constructor)
    explicit BiPoly(std::vector<Poly> by_n_degree);

    static BiPoly n();

    /// -1 for zero.
    long n_degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    Poly coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Poly(); }

    /// Specializes n to an integer rung.
    Poly at(long rung) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly operator-() const;
    BiPoly pow(unsigned e) const;

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    /// Canonical text, re-parseable by parse_expression ("1/2*n*t - t").
    std::string str() const;

private:
    void trim();
    std::vector<Poly> c_;
};

/// Parses the ladder expression grammar: rational literals, the variables
/// n and t, + - * / (division by a nonzero constant only), ^ with a
/// non-negative integer exponent, and parentheses. A Unicode middle dot
/// and the Unicode minus sign are accepted as * and -.
BiPoly parse_expression(std::string_view text);

}  // namespace famdirac
