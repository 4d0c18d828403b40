#include "projcong/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace projcong {

namespace {

double polygon_area(const std::vector<Vec2>& verts) {
    double twice = 0.0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const Vec2& a = verts[i];
        const Vec2& b = verts[(i + 1) % verts.size()];
        twice += cross(a, b);
    }
    return 0.5 * twice;
}

}  // namespace

Polygon2::Polygon2(std::vector<Vec2> ccw_vertices) : verts_(std::move(ccw_vertices)) {
    if (verts_.size() < 3)
        throw std::invalid_argument("Polygon2: need at least 3 vertices");

    double scale = 0.0;
    for (const auto& v : verts_) scale = std::max({scale, std::abs(v.x), std::abs(v.y)});
    const double edge_tol = -1e-12 * scale * scale;

    const std::size_t m = verts_.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Vec2& a = verts_[i];
        const Vec2& b = verts_[(i + 1) % m];
        const Vec2& c = verts_[(i + 2) % m];
        const Vec2 e1{b.x - a.x, b.y - a.y};
        const Vec2 e2{c.x - b.x, c.y - b.y};
        if (cross(e1, e2) < edge_tol)
            throw std::invalid_argument("Polygon2: vertices are not in convex CCW order");
        // Origin strictly to the left of every edge <=> strictly inside.
        if (cross(a, b) <= 0.0)
            throw OriginNotInteriorError("Polygon2: origin is not strictly inside");
    }
}

double Polygon2::support(double t) const {
    const Vec2 d{std::cos(t), std::sin(t)};
    double h = -std::numeric_limits<double>::infinity();
    for (const auto& v : verts_) h = std::max(h, dot(v, d));
    return h;
}

double Polygon2::area() const { return polygon_area(verts_); }

std::vector<Vec2> convex_hull(std::vector<Vec2> points) {
    std::sort(points.begin(), points.end(), [](const Vec2& a, const Vec2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    points.erase(std::unique(points.begin(), points.end(),
                             [](const Vec2& a, const Vec2& b) {
                                 return a.x == b.x && a.y == b.y;
                             }),
                 points.end());

    const std::size_t n = points.size();
    if (n < 3) throw DegenerateProjectionError("convex_hull: fewer than 3 distinct points");

    double scale = 0.0;
    for (const auto& p : points) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    const double turn_tol = 1e-14 * scale * scale;

    std::vector<Vec2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower hull
        while (k >= 2 && cross({hull[k - 1].x - hull[k - 2].x, hull[k - 1].y - hull[k - 2].y},
                               {points[i].x - hull[k - 1].x, points[i].y - hull[k - 1].y}) <= turn_tol)
            --k;
        hull[k++] = points[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {  // upper hull
        while (k >= lower && cross({hull[k - 1].x - hull[k - 2].x, hull[k - 1].y - hull[k - 2].y},
                                   {points[i].x - hull[k - 1].x, points[i].y - hull[k - 1].y}) <= turn_tol)
            --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);

    if (hull.size() < 3 || std::abs(polygon_area(hull)) < 1e-12)
        throw DegenerateProjectionError("convex_hull: degenerate hull");
    return hull;
}

Polygon2 projection_polygon(const PolytopeBody& body, const GreatCircleFrame& frame) {
    std::vector<Vec2> pts;
    pts.reserve(body.vertices().size());
    for (const auto& v : body.vertices())
        pts.push_back({dot(v, frame.e1.vec()), dot(v, frame.e2.vec())});
    return Polygon2(convex_hull(std::move(pts)));
}

Polygon2 polar_polygon(const Polygon2& poly) {
    const auto& v = poly.vertices();
    const std::size_t m = v.size();
    std::vector<Vec2> polar;
    polar.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % m];
        // Intersection of a . x = 1 and b . x = 1; det > 0 because the
        // vertices wind counterclockwise around the interior origin.
        const double det = cross(a, b);
        polar.push_back({(b.y - a.y) / det, (a.x - b.x) / det});
    }
    return Polygon2(std::move(polar));
}

double polygon_radial(const Polygon2& poly, double t) {
    const Vec2 d{std::cos(t), std::sin(t)};
    const auto& v = poly.vertices();
    const std::size_t m = v.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % m];
        const Vec2 e{b.x - a.x, b.y - a.y};
        const double denom = cross(d, e);
        if (denom == 0.0) continue;  // ray parallel to the edge
        const double lambda = cross(a, e) / denom;
        const double s = cross(a, d) / denom;
        if (lambda > 0.0 && s >= -1e-12 && s <= 1.0 + 1e-12)
            best = std::min(best, lambda);
    }
    if (!std::isfinite(best))
        throw std::runtime_error("polygon_radial: ray missed every edge");
    return best;
}

double polar_polygon_radial(const Polygon2& poly, double t) {
    return polygon_radial(polar_polygon(poly), t);
}

}  // namespace projcong
