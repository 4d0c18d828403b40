#pragma once

#include <vector>

#include "projcong/body.hpp"
#include "projcong/errors.hpp"
#include "projcong/frame.hpp"

namespace projcong {

struct Vec2 {
    double x{0.0}, y{0.0};
};

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

/// Convex polygon in a great-circle frame's (e1, e2) coordinates, vertices in
/// counterclockwise order with the 2D origin strictly inside. Both properties
/// are checked at construction.
class Polygon2 {
public:
    explicit Polygon2(std::vector<Vec2> ccw_vertices);

    const std::vector<Vec2>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }

    /// 2D support function at in-plane angle t: max of v . (cos t, sin t).
    double support(double t) const;

    double area() const;

private:
    std::vector<Vec2> verts_;
};

/// Counterclockwise convex hull of a 2D point set (monotone chain, collinear
/// points dropped). Throws DegenerateProjectionError when the hull area falls
/// below 1e-12.
std::vector<Vec2> convex_hull(std::vector<Vec2> points);

/// Orthogonal projection of a polytope onto the frame's plane, as the convex
/// hull of the projected vertices. The 2D support of the result at angle t
/// equals the 3D support at circle_point(frame, t).
Polygon2 projection_polygon(const PolytopeBody& body, const GreatCircleFrame& frame);

/// Polar dual polygon { x : v_i . x <= 1 } of a convex polygon with the
/// origin strictly inside. Vertex j of the polar is the intersection of the
/// lines v_j . x = 1 and v_{j+1} . x = 1.
Polygon2 polar_polygon(const Polygon2& poly);

/// Radial function of a convex polygon at angle t, by intersecting the ray
/// from the origin with the polygon's edges.
double polygon_radial(const Polygon2& poly, double t);

/// Radial function of the polar dual at angle t, computed through the
/// explicit polar-polygon construction. Numerically equal to
/// 1 / support(poly, t) but evaluated along an independent route, which makes
/// it usable as a cross-check of the duality identity.
double polar_polygon_radial(const Polygon2& poly, double t);

}  // namespace projcong
