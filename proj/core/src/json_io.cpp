#include "famdirac/json_io.hpp"

#include <fstream>
#include <sstream>

namespace famdirac {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InvalidInput("bad_json", what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

long as_long(const Json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<long>();
}

std::size_t as_index(const Json& j, const std::vector<BasisElement>& basis) {
    if (j.is_string()) {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i].label == j.get<std::string>()) return i;
        bad("unknown basis label '" + j.get<std::string>() + "'");
    }
    if (!j.is_number_integer() || j.get<long>() < 0) bad("basis reference must be a label or a non-negative index");
    return j.get<std::size_t>();
}

std::vector<std::size_t> index_list(const Json& j, const std::vector<BasisElement>& basis) {
    if (!j.is_array()) bad("expected a list of basis references");
    std::vector<std::size_t> out;
    for (const auto& e : j) out.push_back(as_index(e, basis));
    return out;
}

Json index_json(const std::vector<std::size_t>& v) {
    Json out = Json::array();
    for (std::size_t i : v) out.push_back(i);
    return out;
}

ScalarMatrix scalar_matrix_from_json(const Json& j) {
    if (!j.is_array()) bad("Weyl element must be a matrix");
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? j[0].size() : 0;
    ScalarMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) bad("ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c]);
    }
    return m;
}

Monomial monomial_from_exponents(const Json& j, const LieFamily& fam) {
    if (!j.is_array() || j.size() != fam.dim()) bad("exponent vector must have one entry per basis element");
    std::vector<unsigned> e;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<long>() < 0) bad("exponents must be non-negative integers");
        e.push_back(x.get<unsigned>());
    }
    Monomial m(fam.dim());
    for (std::size_t i = 0; i < e.size(); ++i) m[fam.pbw_position(i)] = e[i];
    return m;
}

Json exponents_json(const Monomial& m, const LieFamily& fam) {
    Json out = Json::array();
    for (unsigned e : exponents_by_basis(fam, m)) out.push_back(e);
    return out;
}

std::string monomial_text(const Monomial& m, const LieFamily& fam) {
    std::string out;
    for (std::size_t pos = 0; pos < m.size(); ++pos) {
        if (m[pos] == 0) continue;
        if (!out.empty()) out += "*";
        out += fam.element(fam.pbw_order()[pos]).label;
        if (m[pos] > 1) out += "^" + std::to_string(m[pos]);
    }
    return out;
}

std::string coeff_prefix(const Poly& c, bool has_body) {
    if (!has_body) return c.str();
    if (c == Poly(1)) return "";
    if (c == Poly(-1)) return "-";
    if (c.degree() == 0 && c.coeff(0).im() == 0) return c.str() + "*";
    return "(" + c.str() + ")*";
}

std::string join_terms(const std::vector<std::string>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& t : terms) {
        if (out.empty()) out = t;
        else if (t.rfind('-', 0) == 0) out += " - " + t.substr(1);
        else out += " + " + t;
    }
    return out;
}

}  // namespace

Json to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const Json& j) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    bad("scalar must be a string like \"3/4\" or an integer");
}

Json to_json(const Poly& p) {
    Json out = Json::array();
    for (const Scalar& c : p.coeffs()) out.push_back(to_json(c));
    return out;
}

Poly poly_from_json(const Json& j) {
    if (j.is_number_integer()) return Poly(j.get<long>());
    if (j.is_string()) return Poly::parse(j.get<std::string>());
    if (!j.is_array()) bad("polynomial must be a coefficient list or an expression string");
    std::vector<Scalar> c;
    for (const auto& x : j) c.push_back(scalar_from_json(x));
    return Poly(std::move(c));
}

Json to_json(const Laurent& p) { return Json{{"valuation", p.valuation()}, {"coeffs", to_json(p.body())}}; }

Laurent laurent_from_json(const Json& j) {
    if (!j.is_object()) return Laurent(poly_from_json(j));
    return Laurent(as_long(field(j, "valuation"), "valuation"), poly_from_json(field(j, "coeffs")));
}

Json to_json(const PolyMatrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

PolyMatrix poly_matrix_from_json(const Json& j) {
    if (!j.is_array()) bad("matrix must be a list of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? j[0].size() : 0;
    PolyMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) bad("ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = poly_from_json(j[r][c]);
    }
    return m;
}

Json to_json(const LieFamily& fam) {
    Json out;
    Json basis = Json::array();
    for (const auto& b : fam.basis())
        basis.push_back({{"label", b.label}, {"type", b.parity == Parity::compact ? "compact" : "noncompact"}});
    out["basis"] = std::move(basis);
    Json st = Json::array();
    for (std::size_t i = 0; i < fam.dim(); ++i)
        for (std::size_t j = i + 1; j < fam.dim(); ++j) {
            if (fam.bracket(i, j).empty()) continue;
            Json val = Json::array();
            for (const auto& [k, c] : fam.bracket(i, j)) val.push_back(Json::array({k, to_json(c)}));
            st.push_back(Json::array({i, j, std::move(val)}));
        }
    out["structure"] = std::move(st);
    out["n"] = fam.n_deform();
    out["form"] = to_json(fam.form());
    if (const auto& cd = fam.cartan()) {
        out["cartan"] = {{"n_minus", index_json(cd->n_minus)}, {"h", index_json(cd->h)}, {"n_plus", index_json(cd->n_plus)},
                         {"t", index_json(cd->t)},          {"a", index_json(cd->a)}};
    }
    if (!fam.weyl().empty()) {
        Json weyl = Json::array();
        for (const auto& w : fam.weyl()) {
            Json m = Json::array();
            for (std::size_t r = 0; r < w.rows(); ++r) {
                Json row = Json::array();
                for (std::size_t c = 0; c < w.cols(); ++c) row.push_back(to_json(w(r, c)));
                m.push_back(std::move(row));
            }
            weyl.push_back(std::move(m));
        }
        out["weyl"] = std::move(weyl);
    }
    if (const auto& iso = fam.isotropic())
        out["isotropic"] = {{"minus", index_json(iso->minus)}, {"plus", index_json(iso->plus)}, {"zero", index_json(iso->zero)}};
    return out;
}

LieFamily family_from_json(const Json& j) {
    try {
        std::vector<BasisElement> basis;
        const Json& jb = field(j, "basis");
        if (!jb.is_array() || jb.empty()) bad("basis must be a nonempty list");
        for (const auto& b : jb) {
            const std::string type = field(b, "type").get<std::string>();
            if (type != "compact" && type != "noncompact") bad("basis type must be compact or noncompact");
            basis.push_back({field(b, "label").get<std::string>(), type == "compact" ? Parity::compact : Parity::noncompact});
        }
        std::vector<BracketEntry<Poly>> brackets;
        if (j.contains("structure")) {
            for (const auto& e : j.at("structure")) {
                if (!e.is_array() || e.size() != 3) bad("structure entries are [i, j, [[k, poly], ...]]");
                BracketEntry<Poly> be{as_index(e[0], basis), as_index(e[1], basis), {}};
                for (const auto& kc : e[2]) {
                    if (!kc.is_array() || kc.size() != 2) bad("bracket terms are [k, poly]");
                    be.value.emplace_back(as_index(kc[0], basis), poly_from_json(kc[1]));
                }
                std::sort(be.value.begin(), be.value.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                brackets.push_back(std::move(be));
            }
        }
        const long n = j.contains("n") ? as_long(j.at("n"), "n") : 0;
        PolyMatrix form = poly_matrix_from_json(field(j, "form"));
        std::optional<CartanData> cartan;
        if (j.contains("cartan")) {
            const Json& c = j.at("cartan");
            auto list = [&](const char* k) { return c.contains(k) ? index_list(c.at(k), basis) : std::vector<std::size_t>{}; };
            cartan = CartanData{list("n_minus"), list("h"), list("n_plus"), list("t"), list("a")};
        }
        std::vector<ScalarMatrix> weyl;
        if (j.contains("weyl"))
            for (const auto& w : j.at("weyl")) weyl.push_back(scalar_matrix_from_json(w));
        std::optional<IsotropicSplit> iso;
        if (j.contains("isotropic")) {
            const Json& c = j.at("isotropic");
            auto list = [&](const char* k) { return c.contains(k) ? index_list(c.at(k), basis) : std::vector<std::size_t>{}; };
            iso = IsotropicSplit{list("minus"), list("plus"), list("zero")};
        }
        return LieFamily(std::move(basis), brackets, n, std::move(form), cartan, std::move(weyl), iso);
    } catch (const nlohmann::json::exception& e) {
        bad(std::string("malformed family: ") + e.what());
    }
}

Json to_json(const UEElement& u, const LieFamily& fam) {
    Json out = Json::array();
    for (const auto& [m, c] : u.terms()) out.push_back(Json::array({exponents_json(m, fam), to_json(c)}));
    return out;
}

Json to_json(const LaurentUEElement& u, const LieFamily& fam) {
    Json out = Json::array();
    for (const auto& [m, c] : u.terms()) out.push_back(Json::array({exponents_json(m, fam), to_json(c)}));
    return out;
}

UEElement ue_from_json(const Json& j, const LieFamily& fam) {
    if (!j.is_array()) bad("enveloping element must be a list of [exponents, poly] pairs");
    UEElement out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) bad("enveloping element terms are [exponents, poly]");
        out.add(monomial_from_exponents(e[0], fam), poly_from_json(e[1]));
    }
    return out;
}

Json to_json(const CliffordElement& c) {
    Json out = Json::array();
    for (const auto& [w, p] : c.terms()) out.push_back(Json::array({w, to_json(p)}));
    return out;
}

CliffordElement clifford_from_json(const Json& j) {
    if (!j.is_array()) bad("Clifford element must be a list of [word, poly] pairs");
    CliffordElement out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned()) bad("Clifford terms are [word, poly]");
        out.add(e[0].get<CliffordWord>(), poly_from_json(e[1]));
    }
    return out;
}

Json to_json(const AElement& a, const LieFamily& fam) {
    Json out = Json::array();
    for (const auto& [k, c] : a.terms()) out.push_back(Json::array({exponents_json(k.first, fam), k.second, to_json(c)}));
    return out;
}

Json to_json(const LaurentAElement& a, const LieFamily& fam) {
    Json out = Json::array();
    for (const auto& [k, c] : a.terms()) out.push_back(Json::array({exponents_json(k.first, fam), k.second, to_json(c)}));
    return out;
}

AElement a_from_json(const Json& j, const LieFamily& fam) {
    if (!j.is_array()) bad("A element must be a list of [exponents, word, poly] triples");
    AElement out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3 || !e[1].is_number_unsigned()) bad("A terms are [exponents, word, poly]");
        out.add({monomial_from_exponents(e[0], fam), e[1].get<CliffordWord>()}, poly_from_json(e[2]));
    }
    return out;
}

std::string render(const UEElement& u, const LieFamily& fam) {
    std::vector<std::string> terms;
    for (const auto& [m, c] : u.terms()) {
        std::string body = monomial_text(m, fam);
        terms.push_back(coeff_prefix(c, !body.empty()) + body);
    }
    return join_terms(terms);
}

std::string render(const AElement& a, const LieFamily& fam, const QuadraticSpaceFamily& q) {
    std::vector<std::string> terms;
    for (const auto& [k, c] : a.terms()) {
        std::string ue = monomial_text(k.first, fam);
        std::string cl;
        for (std::size_t i : word_indices(k.second)) cl += "g(" + q.labels.at(i) + ")";
        std::string body;
        if (!ue.empty() || !cl.empty()) body = (ue.empty() ? "1" : ue) + " (x) " + (cl.empty() ? "1" : cl);
        terms.push_back(coeff_prefix(c, !body.empty()) + body);
    }
    return join_terms(terms);
}

Json to_json(const LadderModule& v) {
    return Json{{"kind", to_string(v.kind)}, {"m", v.m}, {"A", v.a.str()}, {"B", v.b.str()}};
}

LadderModule ladder_from_json(const Json& j) {
    try {
        LadderModule v;
        v.kind = parse_ladder_kind(field(j, "kind").get<std::string>());
        v.m = j.contains("m") ? as_long(j.at("m"), "m") : 0;
        auto expr = [&](const char* k) {
            const Json& e = field(j, k);
            if (e.is_string()) return parse_expression(e.get<std::string>());
            if (e.is_number_integer()) return BiPoly(Poly(e.get<long>()));
            bad(std::string(k) + " must be an expression string in n and t");
        };
        v.a = expr("A");
        v.b = expr("B");
        return v;
    } catch (const nlohmann::json::exception& e) {
        bad(std::string("malformed ladder: ") + e.what());
    }
}

Json to_json(const InfinitesimalCharacter& c) {
    Json out;
    for (std::size_t i = 0; i < c.labels.size(); ++i) out[c.labels[i]] = to_json(c.values.at(i));
    return out;
}

Json to_json(const CohomologyReport& r) {
    Json out = Json::array();
    for (const auto& e : r) {
        Json tor = Json::array();
        for (const auto& p : e.torsion) tor.push_back(to_json(p));
        out.push_back({{"weight", e.weight}, {"free_rank", e.free_rank}, {"torsion", std::move(tor)}, {"labels", e.labels}});
    }
    return out;
}

Json to_json(const VoganReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json ex = Json::array();
        for (const auto& p : e.expected) ex.push_back(to_json(p));
        entries.push_back({{"weight", e.weight}, {"mu_plus_rho_k", std::move(ex)}, {"weyl_conjugate", e.conjugate}});
    }
    return Json{{"pass", r.pass},
                {"omega", to_json(r.omega)},
                {"lambda", r.lambda ? to_json(*r.lambda) : Json()},
                {"entries", std::move(entries)},
                {"cohomology", to_json(r.cohomology)},
                {"message", r.message}};
}

Json to_json(const VermaReport& r) {
    return Json{{"casimir_scalar", to_json(r.casimir_scalar)},
                {"quasi_simple", r.quasi_simple},
                {"lambda_plus_rho", to_json(r.lambda_plus_rho)},
                {"hc_consistent", r.hc_consistent},
                {"infinitesimal_character", r.extracted ? to_json(*r.extracted) : Json()}};
}

Json to_json(const DiracSquareResult& r, const LieFamily& fam) {
    return Json{{"equal", r.equal}, {"lhs", to_json(r.lhs, fam)}, {"rhs", to_json(r.rhs, fam)}, {"constant", to_json(r.constant)}};
}

Json to_json(const std::vector<Diagnostic>& d) {
    Json out = Json::array();
    for (const auto& x : d) out.push_back({{"code", x.code}, {"message", x.message}});
    return out;
}

Json to_json(const CohomologyLocalizationResult& r) {
    Json w = Json::array();
    for (const auto& e : r.weights) {
        Json tr = Json::array(), t0 = Json::array();
        for (const auto& p : e.torsion_r) tr.push_back(to_json(p));
        for (const auto& p : e.torsion_r0) t0.push_back(to_json(p));
        w.push_back({{"weight", e.weight},
                     {"free_rank_R", e.free_rank_r},
                     {"free_rank_R0", e.free_rank_r0},
                     {"torsion_R", std::move(tr)},
                     {"torsion_R0", std::move(t0)},
                     {"consistent", e.consistent}});
    }
    return Json{{"pass", r.pass}, {"weights", std::move(w)}};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("io_error", "cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        bad("'" + path + "': " + e.what());
    }
}

}  // namespace famdirac
