#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "famdirac/scalar.hpp"

namespace famdirac {

/// Univariate polynomial in t over Q(i): the base ring R = K[t].
///
/// Stored densely by ascending exponent with no trailing zero coefficient;
/// the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    Poly(const Scalar& c);  // NOLINT(google-explicit-constructor)
    Poly(long c) : Poly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<Scalar> coeffs);
    Poly(std::initializer_list<Scalar> coeffs) : Poly(std::vector<Scalar>(coeffs)) {}

    /// c * t^k
    static Poly monomial(const Scalar& c, std::size_t k);
    static Poly t() { return monomial(Scalar(1), 1); }

    /// Parses an expression in the single variable t ("t^2/8 - 1", "4*t").
    static Poly parse(std::string_view text);

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_unit() const noexcept { return c_.size() == 1; }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    /// Exponent of the lowest nonzero term (t-adic valuation); 0 for zero.
    std::size_t valuation() const noexcept;

    const std::vector<Scalar>& coeffs() const noexcept { return c_; }
    Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(); }
    const Scalar& lead() const;
    Scalar constant_term() const { return coeff(0); }

    Poly monic() const;
    Poly shifted(std::size_t k) const;  ///< multiply by t^k
    Poly unshifted(std::size_t k) const;  ///< divide by t^k, requires divisibility
    Poly pow(unsigned e) const;
    Scalar eval(const Scalar& x) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Scalar& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
    friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) = default;

    std::string str() const;

private:
    void trim();
    std::vector<Scalar> c_;
};

/// Quotient and remainder with a = q*b + r, deg r < deg b.
/// Throws DomainError("division_by_zero_polynomial") when b = 0.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

/// Exact quotient a / b; throws DomainError if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

bool divides(const Poly& d, const Poly& a);

/// Monic gcd; throws DomainError("both_inputs_zero") when a = b = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Square root in K[t] if `p` is a perfect square (leading coefficient
/// must have a square root in Q(i)).
std::optional<Poly> poly_sqrt(const Poly& p);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace famdirac
