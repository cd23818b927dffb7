#pragma once

#include "famdirac/errors.hpp"
#include "famdirac/laurent.hpp"
#include "famdirac/poly.hpp"

namespace famdirac {

/// t^k in the coefficient ring; negative k only in K[t,1/t].
template <class Coeff>
Coeff t_power(long k);

template <>
inline Poly t_power<Poly>(long k) {
    if (k < 0) throw DomainError("not_polynomial", "negative power of t in K[t]");
    return Poly::monomial(Scalar(1), static_cast<std::size_t>(k));
}

template <>
inline Laurent t_power<Laurent>(long k) {
    return Laurent::monomial(Scalar(1), k);
}

inline Laurent localize(const Poly& p) { return Laurent(p); }

}  // namespace famdirac
