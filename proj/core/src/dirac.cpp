#include "famdirac/dirac.hpp"

#include "famdirac/smith.hpp"

namespace famdirac {

template <class Coeff>
BasicAElement<Coeff> a_tensor(const BasicUE<Coeff>& u, const BasicClifford<Coeff>& c) {
    BasicAElement<Coeff> out;
    for (const auto& [m, a] : u.terms())
        for (const auto& [w, b] : c.terms()) out.add({m, w}, a * b);
    return out;
}

template <class Coeff>
BasicAElement<Coeff> ARing<Coeff>::mul(const BasicAElement<Coeff>& x, const BasicAElement<Coeff>& y) {
    BasicAElement<Coeff> out;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            BasicUE<Coeff> u = pbw_.mul(BasicUE<Coeff>(kx.first, Coeff(1)), BasicUE<Coeff>(ky.first, Coeff(1)));
            BasicClifford<Coeff> c =
                cl_mul(BasicClifford<Coeff>(kx.second, Coeff(1)), BasicClifford<Coeff>(ky.second, Coeff(1)), *q_);
            out += a_tensor(u, c) * (cx * cy);
        }
    return out;
}

template <class Coeff>
BasicAElement<Coeff> a_mul(const BasicAElement<Coeff>& x, const BasicAElement<Coeff>& y,
                           const BasicLieFamily<Coeff>& fam, const BasicQuadraticSpace<Coeff>& q) {
    ARing<Coeff> ring(fam, q);
    return ring.mul(x, y);
}

template <class Coeff>
BasicAElement<Coeff> diagonal_embedding(const BasicLieFamily<Coeff>& fam, const BasicQuadraticSpace<Coeff>& q,
                                        std::size_t k) {
    return a_from_ue(ue_generator(fam, k)) + a_from_clifford(fam, alpha(fam, q, k));
}

template <class Coeff>
BasicAElement<Coeff> dirac_element(const BasicLieFamily<Coeff>& fam, const BasicQuadraticSpace<Coeff>& q) {
    BasicAElement<Coeff> out;
    for (std::size_t i = 0; i < q.dim(); ++i)
        for (std::size_t j = 0; j < q.dim(); ++j) {
            if (q.form_inverse(i, j).is_zero()) continue;
            out += a_tensor(ue_generator(fam, q.basis[i]), cl_gamma(q, j)) * q.form_inverse(i, j);
        }
    return out;
}

template class ARing<Poly>;
template class ARing<Laurent>;
template AElement a_tensor(const UEElement&, const CliffordElement&);
template LaurentAElement a_tensor(const LaurentUEElement&, const LaurentClifford&);
template AElement a_mul(const AElement&, const AElement&, const LieFamily&, const QuadraticSpaceFamily&);
template LaurentAElement a_mul(const LaurentAElement&, const LaurentAElement&, const LaurentFamily&,
                               const LaurentQuadraticSpace&);
template AElement diagonal_embedding(const LieFamily&, const QuadraticSpaceFamily&, std::size_t);
template LaurentAElement diagonal_embedding(const LaurentFamily&, const LaurentQuadraticSpace&, std::size_t);
template AElement dirac_element(const LieFamily&, const QuadraticSpaceFamily&);
template LaurentAElement dirac_element(const LaurentFamily&, const LaurentQuadraticSpace&);

AElement dirac_element_from_basis(const LieFamily& fam, const QuadraticSpaceFamily& q, const PolyMatrix& basis) {
    const std::size_t m = q.dim();
    if (basis.rows() != m || basis.cols() != m) throw InvalidInput("degenerate_basis", "basis must be a square matrix on p");
    auto inv = unimodular_inverse(basis);
    if (!inv) throw InvalidInput("degenerate_basis", "basis is not invertible over K[t]");
    // Dual basis Q with basis^T beta Q = I, i.e. Q = beta^-1 basis^-T.
    PolyMatrix dual = q.form_inverse * inv->transpose();
    auto vector_ue = [&](const PolyMatrix& mat, std::size_t col) {
        UEElement u;
        for (std::size_t k = 0; k < m; ++k) u += ue_generator(fam, q.basis[k]) * mat(k, col);
        return u;
    };
    auto vector_cl = [&](const PolyMatrix& mat, std::size_t col) {
        CliffordElement c;
        for (std::size_t k = 0; k < m; ++k) c += cl_gamma(q, k) * mat(k, col);
        return c;
    };
    AElement out;
    for (std::size_t i = 0; i < m; ++i) out += a_tensor(vector_ue(basis, i), vector_cl(dual, i));
    return out;
}

AElement delta_k_casimir(const LieFamily& fam, const QuadraticSpaceFamily& q) {
    const auto& k = fam.compact_indices();
    PolyMatrix bk(k.size(), k.size());
    for (std::size_t i = 0; i < k.size(); ++i)
        for (std::size_t j = 0; j < k.size(); ++j) bk(i, j) = fam.form()(k[i], k[j]);
    auto inv = unimodular_inverse(bk);
    if (!inv) throw DomainError("degenerate_form", "form restricted to k is not invertible over K[t]");
    ARing<Poly> ring(fam, q);
    std::vector<AElement> delta;
    for (std::size_t x : k) delta.push_back(diagonal_embedding(fam, q, x));
    AElement out;
    for (std::size_t i = 0; i < k.size(); ++i)
        for (std::size_t j = 0; j < k.size(); ++j)
            if (!(*inv)(i, j).is_zero()) out += ring.mul(delta[i], delta[j]) * (*inv)(i, j);
    return out;
}

DiracSquareResult dirac_square_check(const LieFamily& fam, const QuadraticSpaceFamily& q) {
    DiracSquareResult res;
    ARing<Poly> ring(fam, q);
    AElement d = dirac_element(fam, q);
    res.lhs = ring.mul(d, d) * Poly(2);
    const Poly r2 = fam.r() * fam.r();
    if (fam.cartan()) {
        RhoData rd = compute_rho_data(fam);
        res.constant = r2 * (rd.rho_norm_sq - rd.rho_k_norm_sq);
    } else if (q.dim() != 0) {
        throw InvalidInput("missing_cartan_data", "the square identity needs Cartan data for the rho term");
    }
    res.rhs = a_from_ue(casimir(fam)) - delta_k_casimir(fam, q) * r2 +
              a_from_ue(ue_scalar(fam, res.constant));
    res.equal = res.lhs == res.rhs;
    return res;
}

}  // namespace famdirac
