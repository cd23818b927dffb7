#pragma once

#include <nlohmann/json.hpp>

#include "famdirac/dirac.hpp"
#include "famdirac/ladder.hpp"
#include "famdirac/localization.hpp"

namespace famdirac {

/// Key order follows insertion, so output is stable and readable.
using Json = nlohmann::ordered_json;

// Scalars are exact strings ("3/4", "1/2-2*i"); integers are accepted on input.
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

// Polynomials are ascending coefficient lists. On input an expression string
// in t ("t^2/8 - 1") or a bare number is accepted as well.
Json to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// {"valuation": v, "coeffs": [...]} for t^v * p(t).
Json to_json(const Laurent& p);
Laurent laurent_from_json(const Json& j);

Json to_json(const PolyMatrix& m);
PolyMatrix poly_matrix_from_json(const Json& j);

/// Family schema: basis, structure, n, form, cartan, weyl, and optional
/// isotropic {minus, plus, zero}. Basis references may be indices or labels.
Json to_json(const LieFamily& fam);
LieFamily family_from_json(const Json& j);

/// [[exponents by basis index], poly] pairs; each names the PBW monomial
/// whose factor exponents are listed in declaration order.
Json to_json(const UEElement& u, const LieFamily& fam);
UEElement ue_from_json(const Json& j, const LieFamily& fam);
Json to_json(const LaurentUEElement& u, const LieFamily& fam);

/// [word, poly] pairs; words are bitmasks over p-positions.
Json to_json(const CliffordElement& c);
CliffordElement clifford_from_json(const Json& j);

/// [[exponents], word, poly] triples.
Json to_json(const AElement& a, const LieFamily& fam);
AElement a_from_json(const Json& j, const LieFamily& fam);
Json to_json(const LaurentAElement& a, const LieFamily& fam);

/// Readable rendering, e.g. "1/4*x (x) g(y) + 1/4*y (x) g(x)".
std::string render(const UEElement& u, const LieFamily& fam);
std::string render(const AElement& a, const LieFamily& fam, const QuadraticSpaceFamily& q);

/// {"kind", "m", "A", "B"} with A, B expressions in n and t.
Json to_json(const LadderModule& v);
LadderModule ladder_from_json(const Json& j);

Json to_json(const InfinitesimalCharacter& c);
Json to_json(const CohomologyReport& r);
Json to_json(const VoganReport& r);
Json to_json(const VermaReport& r);
Json to_json(const DiracSquareResult& r, const LieFamily& fam);
Json to_json(const std::vector<Diagnostic>& d);
Json to_json(const CohomologyLocalizationResult& r);

/// Reads and parses a JSON file; throws InvalidInput("bad_json") or
/// InvalidInput("io_error").
Json read_json_file(const std::string& path);

}  // namespace famdirac
