#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace famdirac {

/// Exact element a + b*i of the Gaussian rationals Q(i).
///
/// Both parts are GMP rationals kept in canonical form (lowest terms,
/// positive denominator), so equality is structural.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar rational(long num, long den);
    static Scalar imaginary_unit() { return Scalar(0, 1); }

    /// Parses "a", "a/b", "a/b+c/d*i", "c/d*i", "i", "-i".
    static Scalar parse(std::string_view text);

    const mpq_class& re() const noexcept { return re_; }
    const mpq_class& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }
    bool is_integer() const;

    Scalar conj() const { return Scalar(re_, -im_); }
    Scalar norm() const { return Scalar(mpq_class(re_ * re_ + im_ * im_)); }
    Scalar inverse() const;

    /// Square root inside Q(i), if one exists.
    std::optional<Scalar> sqrt() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { return Scalar(-re_, -im_); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    /// Lexicographic on (re, im); an arbitrary but total order for containers.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    /// Sign used for canonical representatives: sign of re, or of im when re = 0.
    int orientation() const;

    std::string str() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace famdirac
