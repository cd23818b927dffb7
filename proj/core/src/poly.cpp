#include "famdirac/poly.hpp"

#include <sstream>

#include "famdirac/errors.hpp"
#include "famdirac/expression.hpp"

namespace famdirac {

Poly::Poly(const Scalar& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Scalar& c, std::size_t k) {
    Poly p;
    if (c.is_zero()) return p;
    p.c_.assign(k + 1, Scalar());
    p.c_[k] = c;
    return p;
}

Poly Poly::parse(std::string_view text) {
    BiPoly b = parse_expression(text);
    if (b.n_degree() > 0) throw InvalidInput("bad_poly", "variable n not allowed in '" + std::string(text) + "'");
    return b.coeff(0);
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::size_t Poly::valuation() const noexcept {
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (!c_[k].is_zero()) return k;
    }
    return 0;
}

const Scalar& Poly::lead() const {
    if (c_.empty()) throw DomainError("zero_polynomial", "leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * lead().inverse();
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    Poly p;
    p.c_.assign(k, Scalar());
    p.c_.insert(p.c_.end(), c_.begin(), c_.end());
    return p;
}

Poly Poly::unshifted(std::size_t k) const {
    if (k == 0 || is_zero()) return *this;
    if (valuation() < k) throw DomainError("not_divisible", "polynomial not divisible by t^" + std::to_string(k));
    return Poly(std::vector<Scalar>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

Poly Poly::pow(unsigned e) const {
    Poly result(1), base = *this;
    while (e) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

Scalar Poly::eval(const Scalar& x) const {
    Scalar acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Scalar& c = c_[k];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool complex = !c.is_real();
        bool negative = !complex && sgn(c.re()) < 0;
        if (!first) os << (negative ? " - " : " + ");
        else if (negative) os << "-";
        std::string mag = complex ? "(" + cs + ")" : (negative ? cs.substr(1) : cs);
        if (k == 0) {
            os << mag;
        } else {
            if (mag != "1") os << mag << "*";
            os << "t";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("division_by_zero_polynomial", "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Scalar> rem = a.coeffs();
    std::vector<Scalar> quot(rem.size() - b.coeffs().size() + 1);
    Scalar inv_lead = b.lead().inverse();
    const auto& bc = b.coeffs();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Scalar q = rem[k + bc.size() - 1] * inv_lead;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) rem[k + j] -= q * bc[j];
        quot[k] = std::move(q);
    }
    rem.resize(bc.size() - 1);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw DomainError("not_divisible", "'" + b.str() + "' does not divide '" + a.str() + "'");
    return q;
}

bool divides(const Poly& d, const Poly& a) {
    if (d.is_zero()) return a.is_zero();
    return poly_divmod(a, d).second.is_zero();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("both_inputs_zero", "gcd of two zero polynomials");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::optional<Poly> poly_sqrt(const Poly& p) {
    if (p.is_zero()) return Poly();
    if (p.degree() % 2 != 0) return std::nullopt;
    auto lead_root = p.lead().sqrt();
    if (!lead_root) return std::nullopt;
    const std::size_t d = static_cast<std::size_t>(p.degree()) / 2;
    // Solve for root coefficients from the top down: p = s^2.
    std::vector<Scalar> s(d + 1);
    s[d] = *lead_root;
    Scalar two_lead = *lead_root * Scalar(2);
    for (std::size_t k = d; k-- > 0;) {
        // coefficient of t^(d + k) in s^2 determines s[k]
        Scalar acc = p.coeff(d + k);
        for (std::size_t i = k + 1; i < d; ++i) acc -= s[i] * s[d + k - i];
        s[k] = acc / two_lead;
    }
    Poly root(std::move(s));
    if (root * root != p) return std::nullopt;
    return root;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace famdirac
