#pragma once

#include <map>
#include <utility>

namespace famdirac {

/// Finite formal linear combination sum c_k * key_k with coefficients in a
/// commutative ring. Zero coefficients are never stored, so structural
/// equality is mathematical equality.
template <class Key, class Coeff>
class Combination {
public:
    using Terms = std::map<Key, Coeff>;

    Combination() = default;
    Combination(const Key& key, const Coeff& c) { add(key, c); }

    const Terms& terms() const& noexcept { return terms_; }
    // By value on rvalues so range-for over a temporary stays valid.
    Terms terms() && { return std::move(terms_); }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Coeff coeff(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Coeff() : it->second;
    }

    void add(const Key& key, const Coeff& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Combination& operator+=(const Combination& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    Combination& operator-=(const Combination& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    Combination& operator*=(const Coeff& f) {
        if (f.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= f;
        return *this;
    }

    friend Combination operator+(Combination a, const Combination& b) { return a += b; }
    friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
    friend Combination operator*(Combination a, const Coeff& f) { return a *= f; }
    friend Combination operator*(const Coeff& f, Combination a) { return a *= f; }
    Combination operator-() const {
        Combination r = *this;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }

    friend bool operator==(const Combination&, const Combination&) = default;

private:
    Terms terms_;
};

}  // namespace famdirac
