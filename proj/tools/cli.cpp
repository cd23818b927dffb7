#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "famdirac/json_io.hpp"
#include "famdirac/sl2.hpp"

namespace famdirac::cli {

namespace {

/// Invalid family data, reported with the full diagnostic list.
struct FamilyRejected {
    std::vector<Diagnostic> diagnostics;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

long parse_long(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw InvalidInput("bad_argument", what + " must be an integer, got '" + s + "'");
}

/// "preset:sl2", "preset:sl2:<n>" or a JSON file.
LieFamily load_family(const std::string& spec) {
    LieFamily fam;
    if (spec.rfind("preset:", 0) == 0) {
        auto parts = split(spec.substr(7), ':');
        if (parts.empty() || parts[0] != "sl2" || parts.size() > 2)
            throw InvalidInput("bad_argument", "unknown family preset '" + spec + "' (use preset:sl2[:n])");
        fam = sl2_family(parts.size() == 2 ? parse_long(parts[1], "deformation degree") : 1);
    } else {
        fam = family_from_json(read_json_file(spec));
    }
    auto diags = validate_family(fam);
    if (!diags.empty()) throw FamilyRejected{std::move(diags)};
    return fam;
}

/// "preset:<kind>:<m>" (kind ds+, ds-, f or a ladder kind name),
/// "preset:lattice_even[:c]", "preset:lattice_odd[:c]", or a JSON file.
LadderModule load_ladder(const std::string& spec, long n_deform) {
    if (spec.rfind("preset:", 0) != 0) return ladder_from_json(read_json_file(spec));
    auto parts = split(spec.substr(7), ':');
    if (parts.empty()) throw InvalidInput("bad_argument", "empty ladder preset");
    std::string kind = parts[0];
    if (kind == "ds+") kind = "ray_up";
    if (kind == "ds-") kind = "ray_down";
    if (kind == "f") kind = "finite";
    const LadderKind k = parse_ladder_kind(kind);
    if (k == LadderKind::lattice_even || k == LadderKind::lattice_odd) {
        if (parts.size() > 2) throw InvalidInput("bad_argument", "lattice presets take at most a Casimir parameter");
        Scalar c = parts.size() == 2 ? Scalar::parse(parts[1]) : Scalar(mpq_class(1, 2));
        return make_ladder(k, 0, n_deform, c);
    }
    if (parts.size() != 2) throw InvalidInput("bad_argument", "ladder preset needs a parameter m, e.g. preset:ds+:3");
    return make_ladder(k, parse_long(parts[1], "m"), n_deform);
}

WeightWindow parse_window(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) throw InvalidInput("bad_argument", "window must look like a..b, got '" + s + "'");
    return {parse_long(s.substr(0, dots), "window start"), parse_long(s.substr(dots + 2), "window end")};
}

UEElement load_element(const std::string& spec, const LieFamily& fam) {
    if (spec == "casimir" || spec.rfind("casimir^", 0) == 0) {
        const long k = spec == "casimir" ? 1 : parse_long(spec.substr(8), "Casimir power");
        if (k < 0) throw InvalidInput("bad_argument", "Casimir power must be non-negative");
        return PbwRing<Poly>(fam).pow(casimir(fam), static_cast<unsigned>(k));
    }
    return ue_from_json(read_json_file(spec), fam);
}

std::string pm(const Poly& p) { return p.is_zero() ? "0" : "+-" + p.str(); }

std::string ktypes(const LadderModule& v) {
    auto n = [](long x) { return std::to_string(x); };
    switch (v.kind) {
        case LadderKind::ray_up: return "{" + n(v.m) + ", " + n(v.m + 2) + ", ...}";
        case LadderKind::ray_down: return "{" + n(-v.m) + ", " + n(-v.m - 2) + ", ...}";
        case LadderKind::finite: return v.m == 0 ? "{0}" : "{" + n(-v.m) + ", ..., " + n(v.m) + "}";
        case LadderKind::lattice_even: return "2Z";
        case LadderKind::lattice_odd: return "2Z+1";
    }
    return "";
}

std::string cohomology_summary(const CohomologyReport& r) {
    std::string out;
    for (const auto& e : r) {
        if (e.is_zero()) continue;
        if (!out.empty()) out += ", ";
        out += "rank " + std::to_string(e.free_rank) + " at " + std::to_string(e.weight);
        if (!e.torsion.empty()) out += " (+torsion)";
    }
    return out.empty() ? "0" : out;
}

int sl2_demo(std::ostream& out) {
    const LieFamily g = sl2_family(1);
    const QuadraticSpaceFamily q = sl2_quadratic_space(1);
    const DiracSquareResult sq = dirac_square_check(g, q);
    const UEElement hc = hc_homomorphism(casimir(g), g);
    bool all = sq.equal;

    out << "sl2 deformation family g_d (n = 1), basis h, x, y\n";
    out << "  D        = " << render(dirac_element(g, q), g, q) << "\n";
    out << "  2D^2     = Omega (x) 1 - t^2 Delta(h^2/8) + " << sq.constant.str() << "  ["
        << (sq.equal ? "ok" : "FAILED") << "]\n";
    out << "  HC(Omega) = " << render(hc, g) << "\n\n";

    struct Row {
        std::string name;
        LadderModule v;
    };
    std::vector<Row> rows;
    for (long m = 1; m <= 3; ++m) {
        rows.push_back({"DS+_" + std::to_string(m), make_ladder(LadderKind::ray_up, m)});
        rows.push_back({"DS-_" + std::to_string(m), make_ladder(LadderKind::ray_down, m)});
        rows.push_back({"F_" + std::to_string(m), make_ladder(LadderKind::finite, m)});
    }
    rows.push_back({"PS_even", make_ladder(LadderKind::lattice_even, 0)});
    rows.push_back({"PS_odd", make_ladder(LadderKind::lattice_odd, 0)});

    out << std::left << std::setw(9) << "module" << std::setw(16) << "K-types" << std::setw(12) << "omega"
        << std::setw(28) << "H_D" << std::setw(10) << "lambda"
        << "vogan\n";
    for (const auto& r : rows) {
        VoganReport rep = vogan_check(r.v, g, q);
        const bool zero = std::all_of(rep.cohomology.begin(), rep.cohomology.end(),
                                      [](const CohomologyEntry& e) { return e.is_zero(); });
        std::string verdict = zero ? "n/a" : (rep.pass ? "pass" : "FAIL");
        if (!zero && !rep.pass) all = false;
        out << std::setw(9) << r.name << std::setw(16) << ktypes(r.v) << std::setw(12) << rep.omega.str()
            << std::setw(28) << cohomology_summary(rep.cohomology) << std::setw(10)
            << (rep.lambda ? pm(rep.lambda->values.at(0)) : "-") << verdict << "\n";
    }
    return all ? ok : check_failed;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void emit_error(std::ostream& err, const std::string& code, const std::string& message) {
    err << Json{{"error", {{"code", code}, {"message", message}}}}.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dirac operators and Dirac cohomology for algebraic families of Lie algebras", "famdirac"};
    app.require_subcommand(1);

    std::string family_spec, module_spec, window_spec, element_spec, input, output, lambda_spec;
    long n_opt = 1;
    unsigned truncate = 4;
    std::string kind_opt, c_opt = "1/2";
    long m_opt = 1;
    bool json_opt = false;

    auto add_family = [&](CLI::App* c) {
        c->add_option("--family", family_spec, "family JSON file, or preset:sl2[:n]")->required();
    };

    auto* family = app.add_subcommand("family", "Lie family operations")->require_subcommand(1);
    auto* family_build = family->add_subcommand("build", "build the deformation family g_(n) from a constant family");
    family_build->add_option("--input", input, "constant family JSON (n = 0)")->required();
    family_build->add_option("--n", n_opt, "deformation degree")->capture_default_str();
    family_build->add_option("--out", output, "output file (stdout if omitted)");

    auto* dirac = app.add_subcommand("dirac", "Dirac element operations")->require_subcommand(1);
    auto* dirac_elem = dirac->add_subcommand("element", "print the Dirac element D");
    add_family(dirac_elem);
    auto* dirac_sq = dirac->add_subcommand("square", "verify the square identity for D");
    add_family(dirac_sq);

    auto* hc = app.add_subcommand("hc", "Harish-Chandra projection of an enveloping algebra element");
    add_family(hc);
    hc->add_option("--element", element_spec, "element JSON file, or casimir[^k]")->required();
    auto* hc_n = hc->add_option("--n", n_opt, "test membership in the subfamily of degree n");

    auto* coh = app.add_subcommand("cohomology", "Dirac cohomology of a ladder module");
    add_family(coh);
    coh->add_option("--module", module_spec, "ladder JSON file, or preset:<kind>:<m>")->required();
    coh->add_option("--window", window_spec, "weight window a..b (default covers all boundary rungs)");

    auto* vogan = app.add_subcommand("vogan", "check the infinitesimal character against Dirac cohomology");
    add_family(vogan);
    vogan->add_option("--module", module_spec, "ladder JSON file, or preset:<kind>:<m>")->required();
    vogan->add_option("--window", window_spec, "weight window a..b");

    auto* verma = app.add_subcommand("verma", "infinitesimal character of a truncated Verma family");
    add_family(verma);
    verma->add_option("--lambda", lambda_spec, "highest weight values on h, comma separated")->required();
    verma->add_option("--truncate", truncate, "PBW degree truncation")->capture_default_str();

    auto* loc = app.add_subcommand("localize", "localization to K[t, 1/t]")->require_subcommand(1);
    auto* loc_check = loc->add_subcommand("check", "localized Dirac element and cohomology comparison");
    add_family(loc_check);
    loc_check->add_option("--module", module_spec, "ladder JSON file, or preset:<kind>:<m>");
    loc_check->add_option("--window", window_spec, "weight window a..b");

    auto* sl2 = app.add_subcommand("sl2", "SL(2,R) presets")->require_subcommand(1);
    auto* sl2_demo_cmd = sl2->add_subcommand("demo", "run the sl2 suite and print the classification table");
    sl2_demo_cmd->add_flag("--json", json_opt, "print cohomology and Vogan reports as JSON instead");
    auto* sl2_preset = sl2->add_subcommand("preset", "print the sl2 family JSON");
    sl2_preset->add_option("--n", n_opt, "deformation degree")->capture_default_str();
    auto* sl2_ladder = sl2->add_subcommand("ladder", "print a preset ladder JSON");
    sl2_ladder->add_option("--kind", kind_opt, "ray_up, ray_down, finite, lattice_even, lattice_odd")->required();
    sl2_ladder->add_option("--m", m_opt, "ladder parameter")->capture_default_str();
    sl2_ladder->add_option("--n", n_opt, "deformation degree")->capture_default_str();
    sl2_ladder->add_option("--c", c_opt, "Casimir parameter for lattices")->capture_default_str();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : invalid_input;
    }

    try {
        if (family_build->parsed()) {
            LieFamily base = family_from_json(read_json_file(input));
            auto d0 = validate_family(base);
            if (!d0.empty()) throw FamilyRejected{d0};
            LieFamily fam = build_deformation_family(base, n_opt);
            auto d = validate_family(fam);
            if (!d.empty()) throw FamilyRejected{d};
            if (output.empty()) {
                emit(out, to_json(fam));
            } else {
                std::ofstream f(output);
                if (!f) throw InvalidInput("io_error", "cannot write '" + output + "'");
                f << to_json(fam).dump(2) << "\n";
                emit(out, Json{{"command", "family build"}, {"n", n_opt}, {"out", output}, {"valid", true}});
            }
            return ok;
        }
        if (dirac_elem->parsed()) {
            LieFamily fam = load_family(family_spec);
            QuadraticSpaceFamily q = rescaled_form(fam);
            AElement d = dirac_element(fam, q);
            emit(out, Json{{"command", "dirac element"}, {"text", render(d, fam, q)}, {"element", to_json(d, fam)}});
            return ok;
        }
        if (dirac_sq->parsed()) {
            LieFamily fam = load_family(family_spec);
            QuadraticSpaceFamily q = rescaled_form(fam);
            DiracSquareResult r = dirac_square_check(fam, q);
            Json j{{"command", "dirac square"}, {"equal", r.equal}, {"twice_square_text", render(r.lhs, fam, q)},
                   {"rhs_text", render(r.rhs, fam, q)}, {"constant", r.constant.str()}};
            j["report"] = to_json(r, fam);
            emit(out, j);
            return r.equal ? ok : check_failed;
        }
        if (hc->parsed()) {
            LieFamily fam = load_family(family_spec);
            UEElement z = load_element(element_spec, fam);
            UEElement img = hc_homomorphism(z, fam);
            const long n = hc_n->count() ? n_opt : fam.n_deform();
            emit(out, Json{{"command", "hc"}, {"element", render(z, fam)}, {"text", render(img, fam)},
                           {"hc", to_json(img, fam)}, {"n", n}, {"in_subfamily", hc_subfamily_check(z, fam, n)}});
            return ok;
        }
        if (coh->parsed()) {
            LieFamily fam = load_family(family_spec);
            QuadraticSpaceFamily q = rescaled_form(fam);
            LadderModule v = load_ladder(module_spec, fam.n_deform());
            WeightWindow w = window_spec.empty() ? default_window(v) : parse_window(window_spec);
            emit(out, to_json(dirac_cohomology(v, fam, q, w)));
            return ok;
        }
        if (vogan->parsed()) {
            LieFamily fam = load_family(family_spec);
            QuadraticSpaceFamily q = rescaled_form(fam);
            LadderModule v = load_ladder(module_spec, fam.n_deform());
            std::optional<WeightWindow> w;
            if (!window_spec.empty()) w = parse_window(window_spec);
            VoganReport r = vogan_check(v, fam, q, w);
            emit(out, to_json(r));
            return r.pass ? ok : check_failed;
        }
        if (verma->parsed()) {
            LieFamily fam = load_family(family_spec);
            std::vector<Poly> lambda;
            for (const auto& s : split(lambda_spec, ',')) lambda.push_back(Poly::parse(s));
            VermaReport r = verma_report(fam, lambda, truncate);
            Json j = to_json(r);
            j["truncation"] = truncate;
            emit(out, j);
            return r.quasi_simple && r.hc_consistent ? ok : check_failed;
        }
        if (loc_check->parsed()) {
            LieFamily fam = load_family(family_spec);
            QuadraticSpaceFamily q = rescaled_form(fam);
            auto psi = psi_lie_check(fam);
            LocalizedDiracResult d = localized_dirac_check(fam, q);
            bool pass = psi.empty() && d.equal;
            Json j{{"command", "localize check"},
                   {"psi_lie", to_json(psi)},
                   {"localized_dirac", {{"equal", d.equal}, {"transported", to_json(d.transported, fam)}}}};
            if (!module_spec.empty()) {
                LadderModule v = load_ladder(module_spec, fam.n_deform());
                WeightWindow w = window_spec.empty() ? default_window(v) : parse_window(window_spec);
                CohomologyLocalizationResult c = cohomology_localization_check(v, fam, q, w);
                pass = pass && c.pass;
                j["cohomology"] = to_json(c);
            }
            j["pass"] = pass;
            emit(out, j);
            return pass ? ok : check_failed;
        }
        if (sl2_demo_cmd->parsed()) {
            if (!json_opt) return sl2_demo(out);
            LieFamily g = sl2_family(1);
            QuadraticSpaceFamily q = sl2_quadratic_space(1);
            Json rows = Json::array();
            bool all = true;
            for (long m = 1; m <= 3; ++m)
                for (LadderKind k : {LadderKind::ray_up, LadderKind::ray_down, LadderKind::finite}) {
                    LadderModule v = make_ladder(k, m);
                    VoganReport r = vogan_check(v, g, q);
                    all = all && r.pass;
                    rows.push_back({{"module", to_json(v)}, {"vogan", to_json(r)}});
                }
            for (LadderKind k : {LadderKind::lattice_even, LadderKind::lattice_odd}) {
                LadderModule v = make_ladder(k, 0);
                rows.push_back({{"module", to_json(v)}, {"cohomology", to_json(dirac_cohomology(v, g, q, default_window(v)))}});
            }
            emit(out, rows);
            return all ? ok : check_failed;
        }
        if (sl2_preset->parsed()) {
            emit(out, to_json(sl2_family(n_opt)));
            return ok;
        }
        if (sl2_ladder->parsed()) {
            std::string kind = kind_opt;
            emit(out, to_json(make_ladder(parse_ladder_kind(kind), m_opt, n_opt, Scalar::parse(c_opt))));
            return ok;
        }
    } catch (const FamilyRejected& f) {
        err << Json{{"error", {{"code", "invalid_family"}, {"diagnostics", to_json(f.diagnostics)}}}}.dump(2) << "\n";
        return invalid_input;
    } catch (const Error& e) {
        emit_error(err, e.code(), e.what());
        return invalid_input;
    } catch (const std::exception& e) {
        emit_error(err, "internal_error", e.what());
        return invalid_input;
    }
    return invalid_input;
}

}  // namespace famdirac::cli
