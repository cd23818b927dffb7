#include "famdirac/expression.hpp"

#include <cctype>
#include <sstream>

#include "famdirac/errors.hpp"

namespace famdirac {

BiPoly::BiPoly(Poly p) {
    if (!p.is_zero()) c_.push_back(std::move(p));
}

BiPoly::BiPoly(std::vector<Poly> by_n_degree) : c_(std::move(by_n_degree)) { trim(); }

BiPoly BiPoly::n() { return BiPoly(std::vector<Poly>{Poly(), Poly(1)}); }

void BiPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly BiPoly::at(long rung) const {
    Poly acc;
    Scalar x(rung);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Poly> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return BiPoly(std::move(out));
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& p : r.c_) p = -p;
    return r;
}

BiPoly BiPoly::pow(unsigned e) const {
    BiPoly r(Poly(1));
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
}

std::string BiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const auto& tc = c_[i].coeffs();
        for (std::size_t j = tc.size(); j-- > 0;) {
            const Scalar& c = tc[j];
            if (c.is_zero()) continue;
            bool negative = c.is_real() && sgn(c.re()) < 0;
            std::string mag = c.is_real() ? (negative ? (-c).str() : c.str()) : "(" + c.str() + ")";
            if (!first) os << (negative ? " - " : " + ");
            else if (negative) os << "-";
            std::string vars;
            if (i > 0) vars += i == 1 ? "n" : "n^" + std::to_string(i);
            if (j > 0) vars += std::string(vars.empty() ? "" : "*") + (j == 1 ? "t" : "t^" + std::to_string(j));
            if (vars.empty()) os << mag;
            else if (mag == "1") os << vars;
            else os << mag << "*" << vars;
            first = false;
        }
    }
    return os.str();
}

namespace {

class Parser {
public:
    explicit Parser(std::string text) : s_(std::move(text)) {}

    BiPoly parse() {
        BiPoly v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw InvalidInput("bad_expression", "expression '" + s_ + "': " + why);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    BiPoly expr() {
        BiPoly v;
        if (eat('-')) v = -term();
        else {
            eat('+');
            v = term();
        }
        while (true) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }

    BiPoly term() {
        BiPoly v = power();
        while (true) {
            if (eat('*')) {
                v = v * power();
            } else if (eat('/')) {
                BiPoly d = power();
                if (d.n_degree() != 0 || !d.coeff(0).is_constant()) fail("division by a non-constant");
                v = v * BiPoly(Poly(d.coeff(0).lead().inverse()));
            } else {
                // implicit multiplication: "2t", "t(n+1)"
                skip_ws();
                if (pos_ < s_.size() && (s_[pos_] == '(' || s_[pos_] == 'n' || s_[pos_] == 't' || s_[pos_] == 'i')) {
                    v = v * power();
                } else {
                    return v;
                }
            }
        }
    }

    BiPoly power() {
        BiPoly base = atom();
        if (eat('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent must be a non-negative integer");
            base = base.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
        }
        return base;
    }

    BiPoly atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            BiPoly v = expr();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (c == 'n') {
            ++pos_;
            return BiPoly::n();
        }
        if (c == 't') {
            ++pos_;
            return BiPoly(Poly::t());
        }
        if (c == 'i') {
            ++pos_;
            return BiPoly(Poly(Scalar::imaginary_unit()));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpz_class z(s_.substr(start, pos_ - start));
            return BiPoly(Poly(Scalar(mpq_class(z))));
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string s_;
    std::size_t pos_ = 0;
};

std::string normalize_unicode(std::string_view in) {
    std::string out(in);
    auto replace_all = [&](const std::string& from, const std::string& to) {
        for (std::size_t p = out.find(from); p != std::string::npos; p = out.find(from, p + to.size()))
            out.replace(p, from.size(), to);
    };
    replace_all("\xC2\xB7", "*");      // middle dot
    replace_all("\xE2\x8B\x85", "*");  // dot operator
    replace_all("\xE2\x88\x92", "-");  // minus sign
    return out;
}

}  // namespace

BiPoly parse_expression(std::string_view text) { return Parser(normalize_unicode(text)).parse(); }

}  // namespace famdirac
