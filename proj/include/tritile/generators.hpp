#pragma once

#include "tritile/tiling.hpp"

namespace tritile {

// Closed-form constructions: small tilings with known structure, used as
// fixtures for the analytic passes and as positive instances for search.

// Subdivision of a triangle similar to the tile, scaled by n, into n^2
// congruent copies by lines parallel to the sides. Upward rows are translates
// of the base tile, downward gaps are filled by half-turn copies.
Tiling gen_quadratic(int n, const TileSpec& spec, AngleClass frame = {0, 0});

// Two mirror-image tiles joined along their c edge. The region is a kite with
// corner angles (2*alpha, 2pi/3, 2*beta, 2pi/3) and sides (b, a, a, b).
Tiling gen_kite(const TileSpec& spec, AngleClass frame = {0, 0});

// Two half-turn-related copies joined along shared_side. The region is a
// parallelogram; sharing c gives boundary sides (b, a, b, a).
Tiling gen_parallelogram(const TileSpec& spec, AngleClass frame = {0, 0},
                         SideLabel shared_side = SideLabel::C);

// Open ring fragment: an equilateral region of side x*c whose boundary is
// lined with x tiles per side, every c edge on the boundary and the 2pi/3
// apex pointing inward. The interior stays uncovered (fragment mode).
Tiling gen_ring(int x, const TileSpec& spec, AngleClass frame = {0, 0});

// Open patch around one vertex X sitting in the interior of a longer c edge
// below it: six tiles fan over X (angles alpha, alpha, alpha, beta, beta,
// beta), one more tile carries the covering c edge underneath. The patch
// forces the documented one-way link into X along the a-carrier.
Tiling gen_appendix_fixture(const TileSpec& spec);

// Three tiles around a simple pi-vertex at the origin with a c edge and an
// a edge meeting on the horizontal carrier; exercises both segment-extension
// audits (c then a across a pi vertex, a then c across a simple vertex).
Tiling gen_extension_patch(const TileSpec& spec);

// Scalar bookkeeping of the published N=1215 equilateral tiling by (3,5,7):
// side length, twice-area identity, and the boundary invariant totals.
struct WorkedExampleReport {
    Rat L;                 // equilateral side, 27a + b + 7c
    long N = 0;            // tile count
    Rat area_lhs, area_rhs;  // N*a*b vs L^2 (common sin factor cancels)
    Rat zh_boundary_big;   // invariant of the full boundary
    Rat zh_trapezoid;      // invariant of one of the nine congruent trapezoids
    bool consistent = false;
};

WorkedExampleReport worked_example_arithmetic();

}  // namespace tritile
