#pragma once

#include "famdirac/ladder.hpp"
#include "famdirac/lie_family.hpp"

namespace famdirac {

/// Constant family R x sl2 with basis h (compact), x, y (noncompact),
/// [h,x] = 2x, [h,y] = -2y, [x,y] = h, Killing form beta(h,h) = 8,
/// beta(x,y) = 4, Cartan data h = t = <h>, n- = <y>, n+ = <x>, Weyl group
/// {+1, -1} on h and isotropic split p- = <y>, p+ = <x>.
LieFamily sl2_constant_family();

/// The deformation family g_(n) of sl2; n = 1 is the family g_d.
LieFamily sl2_family(long n = 1);

/// Quadratic space of sl2_family(n) with its stored isotropic split.
QuadraticSpaceFamily sl2_quadratic_space(long n = 1);

/// Canonical ladders over sl2_family(n_deform), with s = t^n_deform / 2:
///   ray_up (DS+_m), ray_down (DS-_m): A_n = s (m-2-n), B_n = s (n+m) and the
///     mirrored split for ray_down;
///   finite (F_m): A_n = s (m-n), B_n = s (m+n+2);
///   lattices: A_n = s (c-n-1), B_n = s (c+n+1), Casimir s^2/2 (c^2-1).
/// Throws InvalidInput("bad_parameters") for m < 1 on rays, m < 0 on finite,
/// or n_deform < 0.
LadderModule make_ladder(LadderKind kind, long m, long n_deform = 1, const Scalar& c = Scalar(mpq_class(1, 2)));

}  // namespace famdirac
