#include "famdirac/laurent.hpp"

#include <sstream>

#include "famdirac/errors.hpp"

namespace famdirac {

Laurent::Laurent(const Poly& p) : body_(p) { normalize(); }

Laurent::Laurent(long valuation, const Poly& p) : val_(valuation), body_(p) { normalize(); }

void Laurent::normalize() {
    if (body_.is_zero()) {
        val_ = 0;
        return;
    }
    std::size_t v = body_.valuation();
    if (v > 0) {
        body_ = body_.unshifted(v);
        val_ += static_cast<long>(v);
    }
}

Scalar Laurent::coeff(long k) const {
    if (is_zero() || k < val_) return Scalar();
    return body_.coeff(static_cast<std::size_t>(k - val_));
}

Poly Laurent::to_poly() const {
    if (!is_polynomial()) throw DomainError("not_polynomial", "Laurent element " + str() + " has negative powers");
    return body_.shifted(static_cast<std::size_t>(val_));
}

Laurent Laurent::inverse() const {
    if (!is_unit()) throw DomainError("not_unit", str() + " is not a unit of K[t,1/t]");
    return Laurent(-val_, Poly(body_.lead().inverse()));
}

Laurent Laurent::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    return Laurent(val_ * e, body_.pow(static_cast<unsigned>(e)));
}

Laurent& Laurent::operator+=(const Laurent& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    long v = std::min(val_, o.val_);
    body_ = body_.shifted(static_cast<std::size_t>(val_ - v)) + o.body_.shifted(static_cast<std::size_t>(o.val_ - v));
    val_ = v;
    normalize();
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent& Laurent::operator*=(const Laurent& o) {
    if (is_zero() || o.is_zero()) return *this = Laurent();
    body_ *= o.body_;
    val_ += o.val_;
    return *this;
}

std::string Laurent::str() const {
    if (is_zero()) return "0";
    if (val_ >= 0) return to_poly().str();
    std::ostringstream os;
    os << "t^" << val_ << "*(" << body_.str() << ")";
    return os.str();
}

Laurent exact_div(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw DomainError("division_by_zero_polynomial", "Laurent division by zero");
    Poly q = exact_div(a.body(), b.body());
    return Laurent(a.valuation() - b.valuation(), q);
}

std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.str(); }

}  // namespace famdirac
