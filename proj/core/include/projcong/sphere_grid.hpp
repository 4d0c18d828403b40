#pragma once

#include <cstddef>
#include <vector>

#include "projcong/vec3.hpp"

namespace projcong {

/// Discrete direction set on S^2. When antipodal is set, for every member u
/// the grid also contains -u (exactly, by construction) and antipode[i] is
/// the index of -directions[i].
struct SphereGrid {
    std::vector<UnitVector3> directions;
    bool antipodal{false};
    std::vector<std::size_t> antipode;

    std::size_t size() const { return directions.size(); }
};

/// Fibonacci spiral lattice of n points, optionally symmetrized with its
/// antipodes (duplicates within an angular tolerance of 1e-9 removed).
/// Deterministic for fixed arguments. Requires n >= 2.
SphereGrid fibonacci_grid(std::size_t n, bool antipodal);

}  // namespace projcong
