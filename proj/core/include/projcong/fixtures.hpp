#pragma once

#include "projcong/body.hpp"
#include "projcong/rng.hpp"

namespace projcong {

/// Seeded random polytope: draws `vertices` points uniformly in a ball of the
/// given radius, recenters them on their centroid, and keeps the draw only if
/// the origin is interior on the default validation grid (rejection, at most
/// 100 attempts, then GenerationError). Deterministic for a fixed Rng state.
PolytopeBody random_polytope(Rng& rng, int vertices, double radius = 1.0);

/// Cube [-half, half]^3 as a vertex polytope.
PolytopeBody cube(double half = 1.0);

/// Regular tetrahedron inscribed in the cube corners (1,1,1), (1,-1,-1),
/// (-1,1,-1), (-1,-1,1).
PolytopeBody tetrahedron();

}  // namespace projcong
