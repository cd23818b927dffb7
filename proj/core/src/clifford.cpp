#include "famdirac/clifford.hpp"

#include <algorithm>
#include <bit>

namespace famdirac {

namespace {

constexpr CliffordWord bit(std::size_t k) { return CliffordWord{1} << k; }

template <class Coeff>
void require_rank(const BasicQuadraticSpace<Coeff>& q) {
    if (q.dim() > 64) throw InvalidInput("rank_too_large", "Clifford words support at most 64 generators");
}

template <class Coeff>
Coeff half(const Coeff& c) {
    return c * Coeff(Scalar::rational(1, 2));
}

/// w * g(e_j) for a single normal word w.
template <class Coeff>
BasicClifford<Coeff> word_times_gen(CliffordWord w, std::size_t j, const BasicQuadraticSpace<Coeff>& q) {
    if (w == 0) return BasicClifford<Coeff>(bit(j), Coeff(1));
    const std::size_t k = 63 - static_cast<std::size_t>(std::countl_zero(w));
    if (j > k) return BasicClifford<Coeff>(w | bit(j), Coeff(1));
    const CliffordWord rest = w & ~bit(k);
    BasicClifford<Coeff> out;
    if (j == k) {
        out.add(rest, half(q.form(k, k)));
        return out;
    }
    // w' e_k e_j = -w' e_j e_k + beta(e_k, e_j) w'
    for (const auto& [m, c] : word_times_gen(rest, j, q).terms()) out.add(m | bit(k), -c);
    out.add(rest, q.form(k, j));
    return out;
}

enum class Role { minus, plus, zero };

template <class Coeff>
Role role_of(std::size_t pos, const BasicQuadraticSpace<Coeff>& q) {
    auto has = [pos](const std::vector<std::size_t>& v) { return std::find(v.begin(), v.end(), pos) != v.end(); };
    if (has(q.iso_minus)) return Role::minus;
    if (has(q.iso_plus)) return Role::plus;
    return Role::zero;
}

template <class Coeff>
BasicSpinVector<Coeff> gen_act(std::size_t j, const BasicSpinVector<Coeff>& s, const BasicQuadraticSpace<Coeff>& q) {
    BasicSpinVector<Coeff> out;
    const Role role = role_of(j, q);
    for (const auto& [w, c] : s.terms()) {
        switch (role) {
            case Role::minus: {
                if (w & bit(j)) break;
                const bool odd = std::popcount(w & (bit(j) - 1)) % 2 == 1;
                out.add(w | bit(j), odd ? -c : c);
                break;
            }
            case Role::plus: {
                std::size_t idx = 0;
                for (std::size_t l : word_indices(w)) {
                    const Coeff& b = q.form(j, l);
                    if (!b.is_zero()) out.add(w & ~bit(l), (idx % 2 == 1) ? -(b * c) : b * c);
                    ++idx;
                }
                break;
            }
            case Role::zero: {
                const bool negative = (std::popcount(w) % 2 == 1) != (q.epsilon < 0);
                out.add(w, negative ? -c : c);
                break;
            }
        }
    }
    return out;
}

}  // namespace

std::vector<std::size_t> word_indices(CliffordWord w) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; w != 0; ++k, w >>= 1)
        if (w & 1) out.push_back(k);
    return out;
}

CliffordWord word_from_indices(const std::vector<std::size_t>& idx) {
    CliffordWord w = 0;
    for (std::size_t k : idx) {
        if (k >= 64) throw InvalidInput("rank_too_large", "Clifford words support at most 64 generators");
        if (w & bit(k)) throw InvalidInput("bad_word", "Clifford word has a repeated index");
        w |= bit(k);
    }
    return w;
}

template <class Coeff>
BasicClifford<Coeff> cl_gamma(const BasicQuadraticSpace<Coeff>& q, std::size_t pos) {
    require_rank(q);
    if (pos >= q.dim()) throw InvalidInput("bad_index", "p-position out of range");
    return BasicClifford<Coeff>(bit(pos), Coeff(1));
}

template <class Coeff>
BasicClifford<Coeff> cl_mul(const BasicClifford<Coeff>& a, const BasicClifford<Coeff>& b,
                            const BasicQuadraticSpace<Coeff>& q) {
    require_rank(q);
    BasicClifford<Coeff> out;
    for (const auto& [wb, cb] : b.terms()) {
        BasicClifford<Coeff> cur = a;
        for (std::size_t j : word_indices(wb)) {
            BasicClifford<Coeff> next;
            for (const auto& [w, c] : cur.terms())
                for (const auto& [w2, c2] : word_times_gen(w, j, q).terms()) next.add(w2, c * c2);
            cur = std::move(next);
        }
        out += cur * cb;
    }
    return out;
}

template <class Coeff>
Matrix<Coeff> so_from_pair(std::size_t a, std::size_t b, const BasicQuadraticSpace<Coeff>& q) {
    const std::size_t m = q.dim();
    if (a >= m || b >= m) throw InvalidInput("bad_index", "p-position out of range");
    Matrix<Coeff> t(m, m);
    for (std::size_t v = 0; v < m; ++v) {
        t(a, v) += q.form(b, v);
        t(b, v) -= q.form(a, v);
    }
    return t;
}

template <class Coeff>
bool is_antisymmetric(const Matrix<Coeff>& t, const BasicQuadraticSpace<Coeff>& q) {
    if (t.rows() != q.dim() || t.cols() != q.dim()) return false;
    Matrix<Coeff> s = t.transpose() * q.form + q.form * t;
    return s.is_zero();
}

template <class Coeff>
BasicClifford<Coeff> phi(const Matrix<Coeff>& t, const BasicQuadraticSpace<Coeff>& q) {
    if (!is_antisymmetric(t, q)) throw InvalidInput("not_antisymmetric", "operator is not beta^r-antisymmetric");
    const std::size_t m = q.dim();
    BasicClifford<Coeff> out;
    for (std::size_t i = 0; i < m; ++i) {
        BasicClifford<Coeff> te, dual;
        for (std::size_t k = 0; k < m; ++k) {
            te.add(bit(k), t(k, i));
            dual.add(bit(k), q.form_inverse(k, i));
        }
        out += cl_bracket(te, dual, q);
    }
    return out * Coeff(Scalar::rational(1, 4));
}

template <class Coeff>
BasicClifford<Coeff> alpha(const BasicLieFamily<Coeff>& fam, const BasicQuadraticSpace<Coeff>& q, std::size_t k) {
    if (!fam.is_compact(k)) throw InvalidInput("not_compact", fam.element(k).label + " is not a compact basis element");
    return phi(ad_on_p(fam, k), q);
}

template <class Coeff>
BasicSpinVector<Coeff> spin_act(const BasicClifford<Coeff>& c, const BasicSpinVector<Coeff>& s,
                                const BasicQuadraticSpace<Coeff>& q) {
    if (!q.has_spin_split()) throw InvalidInput("missing_isotropic_split", "spin module needs an isotropic split of p");
    BasicSpinVector<Coeff> out;
    for (const auto& [w, coef] : c.terms()) {
        BasicSpinVector<Coeff> cur = s;
        auto idx = word_indices(w);
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) cur = gen_act(*it, cur, q);
        out += cur * coef;
    }
    return out;
}

template <class Coeff>
std::vector<CliffordWord> spin_basis(const BasicQuadraticSpace<Coeff>& q) {
    if (!q.has_spin_split()) throw InvalidInput("missing_isotropic_split", "spin module needs an isotropic split of p");
    require_rank(q);
    const std::size_t k = q.iso_minus.size();
    std::vector<CliffordWord> out;
    for (CliffordWord sub = 0; sub < bit(k); ++sub) {
        CliffordWord w = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (sub & bit(i)) w |= bit(q.iso_minus[i]);
        out.push_back(w);
    }
    std::stable_sort(out.begin(), out.end(), [](CliffordWord a, CliffordWord b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return out;
}

template <class Coeff>
std::string word_label(CliffordWord w, const BasicQuadraticSpace<Coeff>& q) {
    if (w == 0) return "1";
    std::string out;
    for (std::size_t k : word_indices(w)) out += (out.empty() ? "" : "^") + q.labels.at(k);
    return out;
}

std::vector<SpinWeight> spin_weights(const LieFamily& fam, const QuadraticSpaceFamily& q) {
    const CartanData& cd = fam.require_cartan();
    std::vector<CliffordElement> alphas;
    for (std::size_t k : cd.t) alphas.push_back(alpha(fam, q, k));
    std::vector<SpinWeight> out;
    for (CliffordWord w : spin_basis(q)) {
        SpinWeight sw{{}, w};
        SpinVector s(w, Poly(1));
        for (std::size_t j = 0; j < alphas.size(); ++j) {
            SpinVector img = spin_act(alphas[j], s, q);
            Poly c = img.coeff(w);
            if (img != s * c || !c.is_constant())
                throw DomainError("spin_not_diagonal", "alpha(" + fam.element(cd.t[j]).label + ") is not diagonal on " +
                                                           word_label(w, q));
            sw.weight.push_back(c.constant_term());
        }
        out.push_back(std::move(sw));
    }
    return out;
}

#define FAMDIRAC_INSTANTIATE(C)                                                                                  \
    template BasicClifford<C> cl_gamma(const BasicQuadraticSpace<C>&, std::size_t);                              \
    template BasicClifford<C> cl_mul(const BasicClifford<C>&, const BasicClifford<C>&, const BasicQuadraticSpace<C>&); \
    template Matrix<C> so_from_pair(std::size_t, std::size_t, const BasicQuadraticSpace<C>&);                    \
    template bool is_antisymmetric(const Matrix<C>&, const BasicQuadraticSpace<C>&);                             \
    template BasicClifford<C> phi(const Matrix<C>&, const BasicQuadraticSpace<C>&);                              \
    template BasicClifford<C> alpha(const BasicLieFamily<C>&, const BasicQuadraticSpace<C>&, std::size_t);        \
    template BasicSpinVector<C> spin_act(const BasicClifford<C>&, const BasicSpinVector<C>&,                     \
                                         const BasicQuadraticSpace<C>&);                                        \
    template std::vector<CliffordWord> spin_basis(const BasicQuadraticSpace<C>&);                                \
    template std::string word_label(CliffordWord, const BasicQuadraticSpace<C>&);

FAMDIRAC_INSTANTIATE(Poly)
FAMDIRAC_INSTANTIATE(Laurent)

}  // namespace famdirac
