#pragma once

#include <ostream>
#include <string>

#include "famdirac/poly.hpp"

namespace famdirac {

/// Laurent polynomial t^v * p(t) over Q(i): the localized ring R0 = K[t, 1/t].
///
/// Normalized so that p has a nonzero constant term; the zero element has
/// p = 0 and v = 0.
class Laurent {
public:
    Laurent() = default;
    Laurent(const Poly& p);  // NOLINT(google-explicit-constructor)
    Laurent(const Scalar& c) : Laurent(Poly(c)) {}  // NOLINT(google-explicit-constructor)
    Laurent(long c) : Laurent(Poly(c)) {}  // NOLINT(google-explicit-constructor)
    Laurent(long valuation, const Poly& p);

    /// c * t^k for any integer k.
    static Laurent monomial(const Scalar& c, long k) { return Laurent(k, Poly(c)); }

    bool is_zero() const noexcept { return body_.is_zero(); }
    /// Units of R0 are the nonzero monomials c*t^k.
    bool is_unit() const noexcept { return body_.is_unit(); }

    long valuation() const noexcept { return val_; }
    /// The t-free part p(t) (constant term nonzero unless zero).
    const Poly& body() const noexcept { return body_; }
    long min_exponent() const noexcept { return val_; }
    long max_exponent() const noexcept { return val_ + body_.degree(); }
    Scalar coeff(long k) const;

    /// True when no negative powers of t occur.
    bool is_polynomial() const noexcept { return is_zero() || val_ >= 0; }
    /// The polynomial this element equals; throws unless is_polynomial().
    Poly to_poly() const;

    Laurent pow(long e) const;  ///< negative exponents allowed for units
    Laurent inverse() const;    ///< units only

    /// Associate normal form: body made monic, t-power stripped.
    Poly unit_normalized() const { return body_.monic(); }

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }
    Laurent operator-() const { return Laurent(val_, -body_); }

    friend bool operator==(const Laurent&, const Laurent&) = default;

    std::string str() const;

private:
    void normalize();
    long val_ = 0;
    Poly body_;
};

/// Exact quotient in R0; throws DomainError if b does not divide a.
Laurent exact_div(const Laurent& a, const Laurent& b);

std::ostream& operator<<(std::ostream& os, const Laurent& p);

}  // namespace famdirac
