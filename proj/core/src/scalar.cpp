#include "famdirac/scalar.hpp"

#include <cctype>

#include "famdirac/errors.hpp"

namespace famdirac {

namespace {

mpq_class parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty() || s == "+") return 1;
    if (s == "-") return -1;
    if (s.front() == '+') s.erase(0, 1);
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-')) {
            throw InvalidInput("bad_scalar", "invalid rational literal '" + std::string(text) + "'");
        }
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
        throw InvalidInput("bad_scalar", "invalid rational literal '" + std::string(text) + "'");
    }
    q.canonicalize();
    return q;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (sgn(q) < 0) return std::nullopt;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return mpq_class(rn, rd);
}

}  // namespace

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw DomainError("division_by_zero", "zero denominator");
    return Scalar(mpq_class(num, den));
}

Scalar Scalar::parse(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw InvalidInput("bad_scalar", "empty scalar literal");
    if (s.back() != 'i') return Scalar(parse_rational(s));

    // Imaginary part present: split at the last sign that is not the leading one.
    std::string body = s.substr(0, s.size() - 1);
    if (!body.empty() && body.back() == '*') body.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) return Scalar(0, parse_rational(body));
    return Scalar(parse_rational(body.substr(0, split)), parse_rational(body.substr(split)));
}

bool Scalar::is_integer() const { return sgn(im_) == 0 && re_.get_den() == 1; }

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("division_by_zero", "inverse of zero scalar");
    mpq_class n = re_ * re_ + im_ * im_;
    return Scalar(mpq_class(re_ / n), mpq_class(-im_ / n));
}

std::optional<Scalar> Scalar::sqrt() const {
    if (sgn(im_) == 0) {
        if (auto r = rational_sqrt(re_)) return Scalar(*r);
        if (auto r = rational_sqrt(mpq_class(-re_))) return Scalar(0, *r);
        return std::nullopt;
    }
    // (a+bi)^2 = x+yi  =>  a^2 = (x+|z|)/2, b = y/(2a)
    auto modulus = rational_sqrt(mpq_class(re_ * re_ + im_ * im_));
    if (!modulus) return std::nullopt;
    auto a = rational_sqrt(mpq_class((re_ + *modulus) / 2));
    if (!a || sgn(*a) == 0) return std::nullopt;
    Scalar root(*a, mpq_class(im_ / (2 * *a)));
    if (root * root != *this) return std::nullopt;
    return root;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw DomainError("division_by_zero", "division by zero scalar");
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

int Scalar::orientation() const {
    int s = sgn(re_);
    return s != 0 ? s : sgn(im_);
}

std::string Scalar::str() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string out = re_.get_str();
    if (sgn(im_) > 0) out += '+';
    return out + im_.get_str() + "*i";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace famdirac
