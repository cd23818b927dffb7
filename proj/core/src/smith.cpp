#include "famdirac/smith.hpp"

#include <optional>

namespace famdirac {

namespace {

struct Pos {
    std::size_t row, col;
};

std::optional<Pos> find_pivot(const PolyMatrix& s, std::size_t k) {
    std::optional<Pos> best;
    long best_deg = 0;
    for (std::size_t i = k; i < s.rows(); ++i)
        for (std::size_t j = k; j < s.cols(); ++j) {
            const Poly& e = s(i, j);
            if (e.is_zero()) continue;
            if (!best || e.degree() < best_deg) {
                best = Pos{i, j};
                best_deg = e.degree();
            }
        }
    return best;
}

}  // namespace

SnfResult smith_normal_form(const PolyMatrix& m) {
    SnfResult r{PolyMatrix::identity(m.rows()), m, PolyMatrix::identity(m.cols()), {}};
    PolyMatrix& s = r.s;
    const std::size_t diag = std::min(s.rows(), s.cols());

    for (std::size_t k = 0; k < diag; ++k) {
        bool settled = false;
        while (!settled) {
            auto piv = find_pivot(s, k);
            if (!piv) return r;  // remaining block is zero
            if (piv->row != k) {
                s.swap_rows(piv->row, k);
                r.u.swap_rows(piv->row, k);
            }
            if (piv->col != k) {
                s.swap_cols(piv->col, k);
                r.v.swap_cols(piv->col, k);
            }

            bool clean = true;
            for (std::size_t i = k + 1; i < s.rows(); ++i) {
                if (s(i, k).is_zero()) continue;
                auto [q, rem] = poly_divmod(s(i, k), s(k, k));
                s.add_row_multiple(i, k, -q);
                r.u.add_row_multiple(i, k, -q);
                if (!rem.is_zero()) clean = false;
            }
            for (std::size_t j = k + 1; j < s.cols(); ++j) {
                if (s(k, j).is_zero()) continue;
                auto [q, rem] = poly_divmod(s(k, j), s(k, k));
                s.add_col_multiple(j, k, -q);
                r.v.add_col_multiple(j, k, -q);
                if (!rem.is_zero()) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide the whole trailing block.
            settled = true;
            for (std::size_t i = k + 1; i < s.rows() && settled; ++i)
                for (std::size_t j = k + 1; j < s.cols(); ++j) {
                    if (!divides(s(k, k), s(i, j))) {
                        s.add_row_multiple(k, i, Poly(1));
                        r.u.add_row_multiple(k, i, Poly(1));
                        settled = false;
                        break;
                    }
                }
        }
        Poly inv(s(k, k).lead().inverse());
        s.scale_row(k, inv);
        r.u.scale_row(k, inv);
        r.invariant_factors.push_back(s(k, k));
    }
    return r;
}

PolyMatrix kernel_basis(const PolyMatrix& m) {
    SnfResult r = smith_normal_form(m);
    return r.v.columns(r.rank(), m.cols());
}

std::vector<QuotientFactor> quotient_decomposition(std::size_t ambient_rank, const PolyMatrix& sub) {
    if (sub.cols() > 0 && sub.rows() != ambient_rank)
        throw InvalidInput("bad_matrix", "submodule generators do not live in the ambient module");
    std::vector<QuotientFactor> out;
    std::size_t rank = 0;
    if (sub.cols() > 0) {
        SnfResult r = smith_normal_form(sub);
        rank = r.rank();
        for (const Poly& d : r.invariant_factors)
            if (!d.is_unit()) out.push_back({false, d});
    }
    for (std::size_t k = rank; k < ambient_rank; ++k) out.push_back({true, Poly()});
    return out;
}

namespace {

/// Column scaling by t^-v_j making every column polynomial with a
/// valuation-zero entry; returns the scaled matrix and the exponents.
std::pair<PolyMatrix, std::vector<long>> clear_columns(const LaurentMatrix& m) {
    PolyMatrix p(m.rows(), m.cols());
    std::vector<long> shift(m.cols(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::optional<long> lo;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (m(i, j).is_zero()) continue;
            long v = m(i, j).valuation();
            if (!lo || v < *lo) lo = v;
        }
        shift[j] = lo.value_or(0);
        Laurent unit = Laurent::monomial(Scalar(1), -shift[j]);
        for (std::size_t i = 0; i < m.rows(); ++i) p(i, j) = (m(i, j) * unit).to_poly();
    }
    return {std::move(p), std::move(shift)};
}

}  // namespace

LaurentSnfResult smith_normal_form(const LaurentMatrix& m) {
    auto [p, shift] = clear_columns(m);
    SnfResult r = smith_normal_form(p);
    LaurentSnfResult out{localize(r.u), localize(r.s), localize(r.v), {}};
    for (std::size_t j = 0; j < m.cols(); ++j) out.v.scale_row(j, Laurent::monomial(Scalar(1), -shift[j]));
    for (std::size_t k = 0; k < r.rank(); ++k) {
        const Laurent& d = out.s(k, k);
        Laurent unit = Laurent::monomial(d.body().lead(), d.valuation()).inverse();
        out.s.scale_row(k, unit);
        out.u.scale_row(k, unit);
        out.invariant_factors.push_back(out.s(k, k).body());
    }
    return out;
}

LaurentMatrix kernel_basis(const LaurentMatrix& m) {
    LaurentSnfResult r = smith_normal_form(m);
    return r.v.columns(r.rank(), m.cols());
}

std::vector<QuotientFactor> quotient_decomposition(std::size_t ambient_rank, const LaurentMatrix& sub) {
    if (sub.cols() > 0 && sub.rows() != ambient_rank)
        throw InvalidInput("bad_matrix", "submodule generators do not live in the ambient module");
    std::vector<QuotientFactor> out;
    std::size_t rank = 0;
    if (sub.cols() > 0) {
        LaurentSnfResult r = smith_normal_form(sub);
        rank = r.rank();
        for (const Poly& d : r.invariant_factors)
            if (!d.is_unit()) out.push_back({false, d});
    }
    for (std::size_t k = rank; k < ambient_rank; ++k) out.push_back({true, Poly()});
    return out;
}

}  // namespace famdirac

namespace famdirac {

std::optional<PolyMatrix> unimodular_inverse(const PolyMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    SnfResult r = smith_normal_form(m);
    if (r.rank() != m.rows()) return std::nullopt;
    for (const Poly& d : r.invariant_factors)
        if (!d.is_unit()) return std::nullopt;
    return r.v * r.u;  // s = I after monic normalization
}

std::optional<LaurentMatrix> unimodular_inverse(const LaurentMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    LaurentSnfResult r = smith_normal_form(m);
    if (r.rank() != m.rows()) return std::nullopt;
    for (const Poly& d : r.invariant_factors)
        if (!d.is_unit()) return std::nullopt;
    return r.v * r.u;
}

}  // namespace famdirac
