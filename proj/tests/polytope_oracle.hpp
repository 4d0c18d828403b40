#pragma once

// Test-only oracles for vertex polytopes, kept independent of the library's
// support-oracle path. Facets are found by brute force over vertex triples
// (O(m^4), fine at test scale) and the radial function is evaluated by
// clipping the ray against the facet halfspaces.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "projcong/vec3.hpp"

namespace projcong::testing {

struct Facet {
    Vec3 normal;    // outward unit normal
    double offset;  // plane normal . x = offset
};

inline std::vector<Facet> brute_force_facets(const std::vector<Vec3>& verts) {
    const std::size_t m = verts.size();
    double scale = 0.0;
    for (const auto& v : verts) scale = std::max(scale, norm(v));
    const double tol = 1e-9 * scale;

    std::vector<Facet> facets;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            for (std::size_t k = j + 1; k < m; ++k) {
                const Vec3 n = cross(verts[j] - verts[i], verts[k] - verts[i]);
                if (norm(n) < 1e-12 * scale * scale) continue;
                const Vec3 unit = n / norm(n);
                const double d = dot(unit, verts[i]);
                bool all_below = true, all_above = true;
                for (const auto& v : verts) {
                    const double s = dot(unit, v) - d;
                    if (s > tol) all_below = false;
                    if (s < -tol) all_above = false;
                }
                if (!all_below && !all_above) continue;
                const Facet f = all_below ? Facet{unit, d} : Facet{-unit, -d};
                const bool dup = std::any_of(facets.begin(), facets.end(), [&](const Facet& g) {
                    return norm(g.normal - f.normal) < 1e-9 && std::abs(g.offset - f.offset) < tol;
                });
                if (!dup) facets.push_back(f);
            }
        }
    }
    if (facets.empty()) throw std::runtime_error("brute_force_facets: no facets found");
    return facets;
}

/// rho(dir) = min over facets with normal . dir > 0 of offset / (normal . dir).
/// Requires the origin in the interior (all offsets positive).
inline double radial_by_ray_clip(const std::vector<Facet>& facets, const UnitVector3& dir) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& f : facets) {
        const double denom = dot(f.normal, dir.vec());
        if (denom > 1e-15) best = std::min(best, f.offset / denom);
    }
    if (!std::isfinite(best)) throw std::runtime_error("radial_by_ray_clip: unbounded ray");
    return best;
}

}  // namespace projcong::testing
