#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "famdirac/dirac.hpp"
#include "famdirac/expression.hpp"

namespace famdirac {

enum class LadderKind { ray_up, ray_down, finite, lattice_even, lattice_odd };

std::string to_string(LadderKind kind);
LadderKind parse_ladder_kind(const std::string& text);

/// Weight ladder with rank-one rungs v_n, step 2:
///   x v_n = A_n(t) v_{n+2},   y v_{n+2} = B_n(t) v_n,   h v_n = n v_n.
/// Weight sets: ray_up {m, m+2, ...}, ray_down {-m, -m-2, ...},
/// finite {-m, ..., m}, lattice_even 2Z, lattice_odd 2Z+1.
struct LadderModule {
    LadderKind kind = LadderKind::finite;
    long m = 0;  ///< unused for lattices
    BiPoly a, b;

    bool contains(long n) const;
    /// A_n with the boundary convention (zero unless n and n+2 are rungs).
    Poly a_at(long n) const;
    /// B_n with the boundary convention (zero unless n and n+2 are rungs).
    Poly b_at(long n) const;
    bool is_lattice() const noexcept { return kind == LadderKind::lattice_even || kind == LadderKind::lattice_odd; }

    friend bool operator==(const LadderModule&, const LadderModule&) = default;
};

/// Closed interval of K~-weights.
struct WeightWindow {
    long lo = 0, hi = 0;
};

WeightWindow default_window(const LadderModule& v);

/// Throws InvalidInput("window_too_small") unless the window covers every
/// boundary phenomenon of the weight set.
void require_window(const LadderModule& v, const WeightWindow& w);

/// Basis indices (h, x, y) of an sl2-shaped family: h spans t, n+ = <x>,
/// n- = <y>, [h,x] = 2x, [h,y] = -2y. Throws InvalidInput("not_sl2_shaped").
struct Sl2Shape {
    std::size_t h, x, y;
};
Sl2Shape require_sl2_shape(const LieFamily& fam);

/// Vector in V: rung -> coefficient.
using LadderVector = Combination<long, Poly>;
/// Vector in V (x) S: (rung, spin word) -> coefficient.
using LadderSpinVector = Combination<std::pair<long, CliffordWord>, Poly>;

LadderVector ladder_act(const LadderModule& v, const LieFamily& fam, const UEElement& u, long rung);
LadderSpinVector ladder_act(const LadderModule& v, const LieFamily& fam, const QuadraticSpaceFamily& q,
                            const AElement& a, long rung, CliffordWord spin);

/// Scalar by which Omega acts on v_n (read off the diagonal).
Poly ladder_casimir_scalar(const LadderModule& v, const LieFamily& fam, long rung);

/// Checks on the rungs touching the window: parameters, Casimir
/// consistency, the relation [x,y] on every rung, and A_n B_n != 0 on
/// interior rungs. Codes: bad_parameters, casimir_inconsistent,
/// module_relation, not_generically_irreducible.
std::vector<Diagnostic> validate_ladder(const LadderModule& v, const LieFamily& fam, const WeightWindow& w);

/// Ordered basis (v_{mu-1} (x) 1, v_{mu+1} (x) y, ...) of the weight-mu space.
std::vector<std::pair<long, CliffordWord>> ladder_weight_space_basis(const LadderModule& v, const LieFamily& fam,
                                                                     const QuadraticSpaceFamily& q, long mu);

/// Matrix of D on the weight-mu space. Throws InvalidInput("weight_out_of_range")
/// when the weight space is empty.
PolyMatrix ladder_weight_space_matrix(const LadderModule& v, const LieFamily& fam, const QuadraticSpaceFamily& q,
                                      long mu);

struct CohomologyEntry {
    long weight = 0;
    std::size_t free_rank = 0;
    std::vector<Poly> torsion;        ///< non-unit invariant factors
    std::vector<std::string> labels;  ///< representatives of the generators

    bool is_zero() const noexcept { return free_rank == 0 && torsion.empty(); }
    friend bool operator==(const CohomologyEntry&, const CohomologyEntry&) = default;
};

/// One entry per weight in the window with a nonempty weight space.
using CohomologyReport = std::vector<CohomologyEntry>;

/// H_D = ker D / (ker D meet im D) of a square block, over K[t] or K[t,1/t].
/// Generators are returned as coordinate columns in the block basis.
struct BlockCohomology {
    std::size_t free_rank = 0;
    std::vector<Poly> torsion;
    std::vector<std::vector<Poly>> generators;  ///< polynomial representatives, torsion first
};
BlockCohomology block_cohomology(const PolyMatrix& d);
BlockCohomology block_cohomology(const LaurentMatrix& d);

/// With validate = false the invariant checks are skipped (synthetic inputs).
CohomologyReport dirac_cohomology(const LadderModule& v, const LieFamily& fam, const QuadraticSpaceFamily& q,
                                  const WeightWindow& w, bool validate = true);

struct VoganEntry {
    long weight = 0;
    std::vector<Poly> expected;  ///< mu + rho_k
    bool conjugate = false;
};

struct VoganReport {
    Poly omega;
    std::optional<InfinitesimalCharacter> lambda;
    std::vector<VoganEntry> entries;
    CohomologyReport cohomology;
    bool pass = false;
    std::string message;
};

VoganReport vogan_check(const LadderModule& v, const LieFamily& fam, const QuadraticSpaceFamily& q,
                        const std::optional<WeightWindow>& w = std::nullopt);

}  // namespace famdirac
