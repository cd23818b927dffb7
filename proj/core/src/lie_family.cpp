#include "famdirac/lie_family.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "famdirac/smith.hpp"

namespace famdirac {

namespace {

template <class Coeff>
LinComb<Coeff> normalized(LinComb<Coeff> v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    LinComb<Coeff> out;
    for (auto& [k, c] : v) {
        if (!out.empty() && out.back().first == k) out.back().second += c;
        else out.emplace_back(k, std::move(c));
    }
    std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
    return out;
}

template <class Coeff>
LinComb<Coeff> negated(LinComb<Coeff> v) {
    for (auto& e : v) e.second = -e.second;
    return v;
}

template <class Coeff>
void accumulate(LinComb<Coeff>& acc, const LinComb<Coeff>& v, const Coeff& f) {
    for (const auto& [k, c] : v) acc.emplace_back(k, f * c);
}

std::string join(const std::vector<std::string>& parts) {
    std::string s;
    for (const auto& p : parts) s += (s.empty() ? "" : "; ") + p;
    return s;
}

}  // namespace

template <class Coeff>
BasicLieFamily<Coeff>::BasicLieFamily(std::vector<BasisElement> basis, const std::vector<BracketEntry<Coeff>>& brackets,
                                      long n_deform, Matrix<Coeff> form, std::optional<CartanData> cartan,
                                      std::vector<ScalarMatrix> weyl, std::optional<IsotropicSplit> isotropic)
    : basis_(std::move(basis)),
      n_(n_deform),
      form_(std::move(form)),
      cartan_(std::move(cartan)),
      weyl_(std::move(weyl)),
      isotropic_(std::move(isotropic)) {
    const std::size_t d = basis_.size();
    if (n_ < 0) throw InvalidInput("bad_family", "deformation index n must be non-negative");
    if (form_.rows() != d || form_.cols() != d) throw InvalidInput("bad_family", "form must be a dim x dim matrix");
    std::set<std::string> seen;
    for (const auto& b : basis_) {
        if (b.label.empty() || !seen.insert(b.label).second)
            throw InvalidInput("bad_family", "basis labels must be non-empty and distinct");
    }

    table_.assign(d * d, {});
    std::vector<bool> given(d * d, false);
    auto in_range = [d](std::size_t k) { return k < d; };
    for (const auto& e : brackets) {
        if (!in_range(e.i) || !in_range(e.j)) throw InvalidInput("bad_family", "bracket index out of range");
        for (const auto& [k, c] : e.value)
            if (!in_range(k)) throw InvalidInput("bad_family", "bracket result index out of range");
        if (given[e.i * d + e.j]) throw InvalidInput("bad_family", "duplicate bracket entry");
        table_[e.i * d + e.j] = normalized(e.value);
        given[e.i * d + e.j] = true;
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (given[i * d + j] && !given[j * d + i]) table_[j * d + i] = negated(table_[i * d + j]);

    for (std::size_t i = 0; i < d; ++i) (is_compact(i) ? compact_ : noncompact_).push_back(i);

    auto check_list = [&](const std::vector<std::size_t>& v, const char* what) {
        for (std::size_t k : v)
            if (!in_range(k)) throw InvalidInput("bad_family", std::string(what) + " index out of range");
    };
    pbw_order_.resize(d);
    for (std::size_t i = 0; i < d; ++i) pbw_order_[i] = i;
    if (cartan_) {
        check_list(cartan_->n_minus, "n_minus");
        check_list(cartan_->h, "h");
        check_list(cartan_->n_plus, "n_plus");
        check_list(cartan_->t, "t");
        check_list(cartan_->a, "a");
        std::vector<std::size_t> order = cartan_->n_minus;
        order.insert(order.end(), cartan_->h.begin(), cartan_->h.end());
        order.insert(order.end(), cartan_->n_plus.begin(), cartan_->n_plus.end());
        std::vector<std::size_t> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        if (sorted == pbw_order_) pbw_order_ = order;
        for (const auto& w : weyl_) {
            if (w.rows() != cartan_->h.size() || w.cols() != cartan_->h.size())
                throw InvalidInput("bad_family", "Weyl matrices must act on h");
        }
    } else if (!weyl_.empty()) {
        throw InvalidInput("bad_family", "Weyl group data requires Cartan data");
    }
    pbw_pos_.resize(d);
    for (std::size_t p = 0; p < d; ++p) pbw_pos_[pbw_order_[p]] = p;

    if (isotropic_) {
        check_list(isotropic_->minus, "isotropic minus");
        check_list(isotropic_->plus, "isotropic plus");
        check_list(isotropic_->zero, "isotropic zero");
    }
}

template <class Coeff>
std::optional<std::size_t> BasicLieFamily<Coeff>::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].label == label) return i;
    return std::nullopt;
}

template <class Coeff>
std::size_t BasicLieFamily<Coeff>::require_index(const std::string& label) const {
    auto i = index_of(label);
    if (!i) throw InvalidInput("unknown_label", "no basis element labeled '" + label + "'");
    return *i;
}

template <class Coeff>
std::optional<std::size_t> BasicLieFamily<Coeff>::p_position(std::size_t i) const {
    auto it = std::find(noncompact_.begin(), noncompact_.end(), i);
    if (it == noncompact_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - noncompact_.begin());
}

template <class Coeff>
LinComb<Coeff> BasicLieFamily<Coeff>::bracket(const LinComb<Coeff>& u, const LinComb<Coeff>& v) const {
    LinComb<Coeff> acc;
    for (const auto& [i, a] : u)
        for (const auto& [j, b] : v) accumulate(acc, bracket(i, j), a * b);
    return normalized(std::move(acc));
}

template <class Coeff>
Coeff BasicLieFamily<Coeff>::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    for (const auto& [idx, c] : bracket(i, j))
        if (idx == k) return c;
    return Coeff();
}

template <class Coeff>
const CartanData& BasicLieFamily<Coeff>::require_cartan() const {
    if (!cartan_) throw InvalidInput("missing_cartan_data", "operation requires Cartan data");
    return *cartan_;
}

template class BasicLieFamily<Poly>;
template class BasicLieFamily<Laurent>;

template <class Coeff>
Matrix<Coeff> ad_on_p(const BasicLieFamily<Coeff>& fam, std::size_t k) {
    const auto& p = fam.noncompact_indices();
    Matrix<Coeff> m(p.size(), p.size());
    for (std::size_t col = 0; col < p.size(); ++col) {
        for (const auto& [idx, c] : fam.bracket(k, p[col])) {
            auto row = fam.p_position(idx);
            if (!row) throw InvariantViolation("theta_automorphism", "ad(" + fam.element(k).label + ") does not preserve p");
            m(*row, col) = c;
        }
    }
    return m;
}

template Matrix<Poly> ad_on_p(const BasicLieFamily<Poly>&, std::size_t);
template Matrix<Laurent> ad_on_p(const BasicLieFamily<Laurent>&, std::size_t);

namespace {

Poly form_on(const LieFamily& fam, const LinComb<Poly>& u, std::size_t k) {
    Poly acc;
    for (const auto& [i, c] : u) acc += c * fam.form()(i, k);
    return acc;
}

Poly form_on(const LieFamily& fam, std::size_t k, const LinComb<Poly>& u) {
    Poly acc;
    for (const auto& [i, c] : u) acc += fam.form()(k, i) * c;
    return acc;
}

std::string lab(const LieFamily& f, std::size_t i) { return f.element(i).label; }

}  // namespace

std::vector<Diagnostic> validate_family(const LieFamily& fam) {
    std::vector<Diagnostic> out;
    const std::size_t d = fam.dim();
    auto report = [&](const std::string& code, const std::string& msg) { out.push_back({code, msg}); };

    for (std::size_t i = 0; i < d; ++i) {
        if (!fam.bracket(i, i).empty()) report("antisymmetry", "[" + lab(fam, i) + "," + lab(fam, i) + "] != 0");
        for (std::size_t j = i + 1; j < d; ++j) {
            if (fam.bracket(i, j) != negated(fam.bracket(j, i)))
                report("antisymmetry", "[" + lab(fam, i) + "," + lab(fam, j) + "] != -[" + lab(fam, j) + "," + lab(fam, i) + "]");
        }
    }

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) {
                LinComb<Poly> bi{{i, Poly(1)}}, bj{{j, Poly(1)}}, bk{{k, Poly(1)}};
                LinComb<Poly> sum = fam.bracket(bi, fam.bracket(bj, bk));
                LinComb<Poly> s2 = fam.bracket(bj, fam.bracket(bk, bi));
                LinComb<Poly> s3 = fam.bracket(bk, fam.bracket(bi, bj));
                sum.insert(sum.end(), s2.begin(), s2.end());
                sum.insert(sum.end(), s3.begin(), s3.end());
                if (!normalized(std::move(sum)).empty())
                    report("jacobi", "Jacobi identity fails on (" + lab(fam, i) + "," + lab(fam, j) + "," + lab(fam, k) + ")");
            }

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [k, c] : fam.bracket(i, j)) {
                if (fam.theta(k) != fam.theta(i) * fam.theta(j)) {
                    report("theta_automorphism", "[" + lab(fam, i) + "," + lab(fam, j) + "] has a component on " + lab(fam, k) +
                                                     " outside the expected theta-eigenspace");
                    break;
                }
            }

    const auto& b = fam.form();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            if (b(i, j) != b(j, i)) report("form_symmetry", "beta(" + lab(fam, i) + "," + lab(fam, j) + ") is not symmetric");
            if (fam.is_compact(i) != fam.is_compact(j) && !b(i, j).is_zero())
                report("form_theta_orthogonal", "beta(" + lab(fam, i) + "," + lab(fam, j) + ") != 0 between k and p");
        }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                if (form_on(fam, fam.bracket(i, j), k) != form_on(fam, i, fam.bracket(j, k)))
                    report("form_invariance", "beta([" + lab(fam, i) + "," + lab(fam, j) + "]," + lab(fam, k) + ") != beta(" +
                                                  lab(fam, i) + ",[" + lab(fam, j) + "," + lab(fam, k) + "])");
            }

    if (const auto& c = fam.cartan()) {
        std::vector<std::size_t> all = c->n_minus;
        all.insert(all.end(), c->h.begin(), c->h.end());
        all.insert(all.end(), c->n_plus.begin(), c->n_plus.end());
        std::sort(all.begin(), all.end());
        bool partition = all.size() == d && std::adjacent_find(all.begin(), all.end()) == all.end();
        if (!partition) report("cartan", "n-, h, n+ do not partition the basis");
        std::vector<std::size_t> ta = c->t;
        ta.insert(ta.end(), c->a.begin(), c->a.end());
        std::sort(ta.begin(), ta.end());
        std::vector<std::size_t> h = c->h;
        std::sort(h.begin(), h.end());
        if (ta != h) report("cartan", "h must be the disjoint union of t and a");
        for (std::size_t k : c->t)
            if (!fam.is_compact(k)) report("cartan", "t element " + lab(fam, k) + " is not compact");
        for (std::size_t k : c->a)
            if (fam.is_compact(k)) report("cartan", "a element " + lab(fam, k) + " is not noncompact");
        for (std::size_t x : c->h)
            for (std::size_t y : c->h)
                if (!fam.bracket(x, y).empty()) report("cartan", "h is not abelian");
        for (const auto& w : fam.weyl())
            if (determinant(w).is_zero()) report("weyl", "Weyl group element is not invertible");
    }

    if (const auto& iso = fam.isotropic()) {
        for (const auto* list : {&iso->minus, &iso->plus, &iso->zero})
            for (std::size_t k : *list)
                if (fam.is_compact(k)) report("isotropic", "isotropic split uses compact element " + lab(fam, k));
    }
    return out;
}

namespace {

void require_valid(const LieFamily& fam, const char* what) {
    auto diags = validate_family(fam);
    if (diags.empty()) return;
    std::vector<std::string> msgs;
    for (const auto& d : diags) msgs.push_back(d.code + ": " + d.message);
    throw InvariantViolation(diags.front().code, std::string(what) + ": " + join(msgs));
}

std::vector<BracketEntry<Poly>> bracket_entries(const LieFamily& fam) {
    std::vector<BracketEntry<Poly>> out;
    for (std::size_t i = 0; i < fam.dim(); ++i)
        for (std::size_t j = 0; j < fam.dim(); ++j)
            if (!fam.bracket(i, j).empty()) out.push_back({i, j, fam.bracket(i, j)});
    return out;
}

}  // namespace

LieFamily build_deformation_family(const LieFamily& constant, long n) {
    if (n < 0) throw InvalidInput("bad_family", "deformation index n must be non-negative");
    if (constant.n_deform() != 0) throw InvalidInput("bad_family", "input must be a constant family (n = 0)");
    for (std::size_t i = 0; i < constant.dim(); ++i)
        for (std::size_t j = 0; j < constant.dim(); ++j)
            for (const auto& [k, c] : constant.bracket(i, j))
                if (!c.is_constant()) throw InvariantViolation("non_constant_structure", "constant family has t-dependent structure constants");
    require_valid(constant, "invalid constant family");

    const Poly r2 = t_power<Poly>(2 * n);
    auto entries = bracket_entries(constant);
    for (auto& e : entries) {
        if (constant.is_compact(e.i) || constant.is_compact(e.j)) continue;
        for (auto& [k, c] : e.value) c *= r2;
    }
    PolyMatrix form = constant.form();
    for (std::size_t i : constant.noncompact_indices())
        for (std::size_t j : constant.noncompact_indices()) form(i, j) *= r2;
    return LieFamily(constant.basis(), entries, n, std::move(form), constant.cartan(), constant.weyl(), constant.isotropic());
}

LieFamily constant_family(const LieFamily& fam) {
    const long n = fam.n_deform();
    if (n == 0) return fam;
    const Poly r2 = t_power<Poly>(2 * n);
    auto entries = bracket_entries(fam);
    for (auto& e : entries) {
        if (fam.is_compact(e.i) || fam.is_compact(e.j)) continue;
        for (auto& [k, c] : e.value) c = exact_div(c, r2);
    }
    PolyMatrix form = fam.form();
    for (std::size_t i : fam.noncompact_indices())
        for (std::size_t j : fam.noncompact_indices()) form(i, j) = exact_div(form(i, j), r2);
    return LieFamily(fam.basis(), entries, 0, std::move(form), fam.cartan(), fam.weyl(), fam.isotropic());
}

QuadraticSpaceFamily rescaled_form(const LieFamily& fam, int epsilon) {
    if (epsilon != 1 && epsilon != -1) throw InvalidInput("bad_epsilon", "epsilon must be +1 or -1");
    QuadraticSpaceFamily q;
    q.basis = fam.noncompact_indices();
    q.epsilon = epsilon;
    const std::size_t m = q.basis.size();
    for (std::size_t k : q.basis) q.labels.push_back(fam.element(k).label);
    const Poly r2 = fam.r() * fam.r();
    q.form = PolyMatrix(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            auto [quot, rem] = poly_divmod(fam.form()(q.basis[i], q.basis[j]), r2);
            if (!rem.is_zero())
                throw InvariantViolation("non_divisible_form", "beta(" + q.labels[i] + "," + q.labels[j] + ") is not divisible by r^2");
            q.form(i, j) = std::move(quot);
        }
    auto inv = unimodular_inverse(q.form);
    if (!inv) throw InvariantViolation("degenerate_form", "rescaled form on p is not unimodular over K[t]");
    q.form_inverse = std::move(*inv);

    std::optional<IsotropicSplit> split = fam.isotropic();
    if (!split && fam.cartan() && fam.cartan()->a.empty()) {
        IsotropicSplit s;
        for (std::size_t k : fam.cartan()->n_minus)
            if (!fam.is_compact(k)) s.minus.push_back(k);
        for (std::size_t k : fam.cartan()->n_plus)
            if (!fam.is_compact(k)) s.plus.push_back(k);
        split = s;
    }
    if (!split) return q;

    auto to_pos = [&](const std::vector<std::size_t>& idx) {
        std::vector<std::size_t> out;
        for (std::size_t k : idx) {
            auto p = fam.p_position(k);
            if (!p) throw InvariantViolation("isotropic", "isotropic split uses compact element " + fam.element(k).label);
            out.push_back(*p);
        }
        return out;
    };
    q.iso_minus = to_pos(split->minus);
    q.iso_plus = to_pos(split->plus);
    q.iso_zero = to_pos(split->zero);

    std::vector<std::size_t> all = q.iso_minus;
    all.insert(all.end(), q.iso_plus.begin(), q.iso_plus.end());
    all.insert(all.end(), q.iso_zero.begin(), q.iso_zero.end());
    std::sort(all.begin(), all.end());
    if (all.size() != m || std::adjacent_find(all.begin(), all.end()) != all.end())
        throw InvariantViolation("isotropic", "isotropic split must partition p");
    if (q.iso_minus.size() != q.iso_plus.size() || q.iso_zero.size() > 1)
        throw InvariantViolation("isotropic", "p+ and p- must have equal rank and p0 rank at most one");
    for (const auto* list : {&q.iso_minus, &q.iso_plus})
        for (std::size_t a : *list)
            for (std::size_t b : *list)
                if (!q.form(a, b).is_zero()) throw InvariantViolation("isotropic", "subspace " + q.labels[a] + " is not isotropic");
    PolyMatrix pairing(q.iso_plus.size(), q.iso_minus.size());
    for (std::size_t i = 0; i < q.iso_plus.size(); ++i)
        for (std::size_t j = 0; j < q.iso_minus.size(); ++j) pairing(i, j) = q.form(q.iso_plus[i], q.iso_minus[j]);
    if (!unimodular_inverse(pairing)) throw InvariantViolation("isotropic", "p+ and p- are not in duality over K[t]");
    for (std::size_t z : q.iso_zero) {
        if (q.form(z, z) != Poly(2)) throw InvariantViolation("isotropic", "p0 generator must satisfy beta(e0,e0) = 2");
        for (std::size_t k = 0; k < m; ++k)
            if (k != z && !q.form(z, k).is_zero()) throw InvariantViolation("isotropic", "p0 is not orthogonal to p+ + p-");
    }
    return q;
}

LieFamily specialize(const LieFamily& fam, const Scalar& x) {
    auto entries = bracket_entries(fam);
    for (auto& e : entries)
        for (auto& [k, c] : e.value) c = Poly(c.eval(x));
    return LieFamily(fam.basis(), entries, 0, to_poly_matrix(evaluate(fam.form(), x)), fam.cartan(), fam.weyl(),
                     fam.isotropic());
}

namespace {

/// Weight of basis element b under ad(h) on the fiber `f`.
Scalar weight_of(const LieFamily& f, std::size_t h, std::size_t b) {
    const auto& br = f.bracket(h, b);
    if (br.empty()) return Scalar();
    if (br.size() != 1 || br.front().first != b)
        throw DomainError("non_diagonalizable", "ad(" + f.element(h).label + ") is not diagonal on " + f.element(b).label);
    return br.front().second.constant_term();
}

Scalar dual_norm(const LieFamily& f, const std::vector<std::size_t>& idx, const std::vector<Scalar>& functional) {
    if (idx.empty()) return Scalar();
    ScalarMatrix g(idx.size(), idx.size()), rhs(idx.size(), 1);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        rhs(i, 0) = functional[i];
        for (std::size_t j = 0; j < idx.size(); ++j) g(i, j) = f.form()(idx[i], idx[j]).constant_term();
    }
    if (determinant(g).is_zero()) throw DomainError("degenerate_form", "form is degenerate on the Cartan subalgebra");
    ScalarMatrix x = solve(g, rhs);
    Scalar norm;
    for (std::size_t i = 0; i < idx.size(); ++i) norm += x(i, 0) * functional[i];
    return norm;
}

}  // namespace

RhoData compute_rho_data(const LieFamily& fam) {
    const CartanData& c = fam.require_cartan();
    const LieFamily fiber = specialize(fam, Scalar(1));
    RhoData rd;
    const Scalar half = Scalar::rational(1, 2);
    for (std::size_t h : c.h) {
        Scalar sum;
        for (std::size_t b : c.n_plus) sum += weight_of(fiber, h, b);
        rd.rho.push_back(sum * half);
    }
    for (std::size_t h : c.t) {
        Scalar sum;
        for (std::size_t b : c.n_plus)
            if (fam.is_compact(b)) sum += weight_of(fiber, h, b);
        rd.rho_k.push_back(sum * half);
    }
    rd.rho_norm_sq = dual_norm(fiber, c.h, rd.rho);
    rd.rho_k_norm_sq = dual_norm(fiber, c.t, rd.rho_k);
    return rd;
}

}  // namespace famdirac
