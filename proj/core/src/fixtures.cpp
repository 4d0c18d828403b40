#include "projcong/fixtures.hpp"

#include <stdexcept>

namespace projcong {

PolytopeBody random_polytope(Rng& rng, int vertices, double radius) {
    if (vertices < 4)
        throw std::invalid_argument("random_polytope: need at least 4 vertices");
    if (!(radius > 0.0))
        throw std::invalid_argument("random_polytope: radius must be positive");

    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<Vec3> verts;
        verts.reserve(static_cast<std::size_t>(vertices));
        Vec3 centroid{};
        for (int i = 0; i < vertices; ++i) {
            verts.push_back(rng.in_ball(radius));
            centroid += verts.back();
        }
        centroid = centroid / static_cast<double>(vertices);
        for (auto& v : verts) v -= centroid;
        try {
            PolytopeBody body(std::move(verts));
            const SphereGrid& grid = default_validation_grid();
            if (validate_origin_interior(body, grid, default_origin_margin(body, grid)))
                return body;
        } catch (const std::invalid_argument&) {
            // coplanar draw, retry
        }
    }
    throw GenerationError("random_polytope: rejection budget exhausted");
}

PolytopeBody cube(double half) {
    std::vector<Vec3> verts;
    for (double sx : {-half, half})
        for (double sy : {-half, half})
            for (double sz : {-half, half}) verts.push_back({sx, sy, sz});
    return PolytopeBody(std::move(verts));
}

PolytopeBody tetrahedron() {
    return PolytopeBody({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}});
}

}  // namespace projcong
