#include "projcong/body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "projcong/frame.hpp"
#include "projcong/rng.hpp"
#include "projcong/spherical_harmonics.hpp"

namespace projcong {

namespace {

// Rejects vertex sets whose affine hull is a plane (or lower). Greedy pick of
// a spanning tetrahedron, scale-relative tolerance.
void require_non_coplanar(const std::vector<Vec3>& verts) {
    if (verts.size() < 4)
        throw std::invalid_argument("PolytopeBody: need at least 4 vertices");

    double scale = 0.0;
    for (const auto& v : verts)
        for (const auto& w : verts) scale = std::max(scale, norm(v - w));
    if (scale <= 0.0)
        throw std::invalid_argument("PolytopeBody: all vertices coincide");

    const Vec3& a = verts[0];
    // Farthest point from a.
    std::size_t ib = 0;
    double best = 0.0;
    for (std::size_t i = 1; i < verts.size(); ++i) {
        const double d = norm(verts[i] - a);
        if (d > best) { best = d; ib = i; }
    }
    const Vec3 ab = verts[ib] - a;
    // Max area with the segment.
    std::size_t ic = 0;
    best = 0.0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const double d = norm(cross(ab, verts[i] - a));
        if (d > best) { best = d; ic = i; }
    }
    const Vec3 n = cross(ab, verts[ic] - a);
    // Max volume with the triangle.
    best = 0.0;
    for (std::size_t i = 0; i < verts.size(); ++i)
        best = std::max(best, std::abs(dot(n, verts[i] - a)));

    if (best <= 1e-9 * scale * scale * scale)
        throw std::invalid_argument("PolytopeBody: vertices are coplanar");
}

}  // namespace

PolytopeBody::PolytopeBody(std::vector<Vec3> vertices) : vertices_(std::move(vertices)) {
    require_non_coplanar(vertices_);
}

double PolytopeBody::support(const UnitVector3& dir) const {
    double h = -std::numeric_limits<double>::infinity();
    for (const auto& v : vertices_) h = std::max(h, dot(v, dir.vec()));
    return h;
}

PolytopeBody PolytopeBody::translated(const Vec3& offset) const {
    std::vector<Vec3> moved = vertices_;
    for (auto& v : moved) v += offset;
    return PolytopeBody(std::move(moved));
}

SupportSeriesBody::SupportSeriesBody(int lmax, std::vector<double> coeffs)
    : lmax_(lmax), coeffs_(std::move(coeffs)) {
    if (lmax_ < 0) throw std::invalid_argument("SupportSeriesBody: lmax must be >= 0");
    const auto expected = static_cast<std::size_t>((lmax_ + 1) * (lmax_ + 1));
    if (coeffs_.size() != expected)
        throw std::invalid_argument("SupportSeriesBody: coefficient count must be (lmax+1)^2");
}

double SupportSeriesBody::support(const UnitVector3& dir) const {
    return evaluate_harmonic_series(lmax_, coeffs_, dir);
}

SupportSeriesBody SupportSeriesBody::ball(double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("ball: radius must be positive");
    return SupportSeriesBody(0, {radius * std::sqrt(4.0 * std::numbers::pi)});
}

SupportSeriesBody SupportSeriesBody::constant_width_p3(double eps) {
    // h = 1 * Y00 / Y00 + eps * P3(z); Y30 = sqrt(7/(4 pi)) P3(z).
    std::vector<double> coeffs(16, 0.0);
    coeffs[0] = std::sqrt(4.0 * std::numbers::pi);
    coeffs[3 * 3 + 3] = eps * std::sqrt(4.0 * std::numbers::pi / 7.0);
    return SupportSeriesBody(3, std::move(coeffs));
}

ReflectedBody::ReflectedBody(BodyPtr inner) : inner_(std::move(inner)) {
    if (!inner_) throw std::invalid_argument("ReflectedBody: null body");
}

double ReflectedBody::support(const UnitVector3& dir) const {
    return inner_->support(-dir);
}

RotatedBody::RotatedBody(BodyPtr inner, const AxisRotation& rotation)
    : inner_(std::move(inner)), rotation_(rotation), inverse_(rotation.inverse()) {
    if (!inner_) throw std::invalid_argument("RotatedBody: null body");
}

double RotatedBody::support(const UnitVector3& dir) const {
    return inner_->support(rotate(inverse_, dir));
}

BodyPtr reflect(BodyPtr body) { return std::make_shared<ReflectedBody>(std::move(body)); }

BodyPtr rotated(BodyPtr body, const AxisRotation& q) {
    return std::make_shared<RotatedBody>(std::move(body), q);
}

double width(const ConvexBody& body, const UnitVector3& dir) {
    return 0.5 * (body.support(dir) + body.support(-dir));
}

double dual_radial(const ConvexBody& body, const UnitVector3& dir) {
    const double h = body.support(dir);
    if (!(h > 0.0))
        throw OriginNotInteriorError("dual_radial: support is not strictly positive");
    return 1.0 / h;
}

double tau_dual(const ConvexBody& body, const UnitVector3& dir) {
    const double rp = dual_radial(body, dir);
    const double rm = dual_radial(body, -dir);
    return 0.5 * (rp * rp + rm * rm);
}

bool validate_origin_interior(const ConvexBody& body, const SphereGrid& grid, double margin) {
    if (grid.directions.empty())
        throw std::invalid_argument("validate_origin_interior: empty grid");
    for (const auto& dir : grid.directions) {
        if (body.support(dir) < margin) return false;
    }
    return true;
}

double default_origin_margin(const ConvexBody& body, const SphereGrid& grid) {
    if (grid.directions.empty())
        throw std::invalid_argument("default_origin_margin: empty grid");
    double hmax = -std::numeric_limits<double>::infinity();
    for (const auto& dir : grid.directions) hmax = std::max(hmax, body.support(dir));
    return 1e-6 * hmax;
}

const SphereGrid& default_validation_grid() {
    static const SphereGrid grid = fibonacci_grid(2000, true);
    return grid;
}

bool sampled_convexity_ok(const ConvexBody& body, int circles, std::uint64_t seed) {
    constexpr double kStep = 1e-3;
    constexpr double kSlack = -1e-6;
    constexpr int kSamples = 64;

    Rng rng(seed);
    for (int c = 0; c < circles; ++c) {
        const GreatCircleFrame frame = frame_for(rng.unit_vector());
        for (int j = 0; j < kSamples; ++j) {
            const double t = 2.0 * std::numbers::pi * j / kSamples;
            const double h0 = body.support(circle_point(frame, t));
            const double hp = body.support(circle_point(frame, t + kStep));
            const double hm = body.support(circle_point(frame, t - kStep));
            const double second = (hp - 2.0 * h0 + hm) / (kStep * kStep);
            if (h0 + second < kSlack) return false;
        }
    }
    return true;
}

}  // namespace projcong
