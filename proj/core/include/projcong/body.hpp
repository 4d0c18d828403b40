#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "projcong/errors.hpp"
#include "projcong/rotation.hpp"
#include "projcong/sphere_grid.hpp"
#include "projcong/vec3.hpp"

namespace projcong {

/// A convex body presented through its support function oracle
/// h(dir) = max { u . dir : u in the body }. Every derived quantity of the
/// pipeline (width, dual radial, tau) is a function of h alone. Immutable
/// after construction; evaluation is pure and reentrant.
class ConvexBody {
public:
    virtual ~ConvexBody() = default;
    virtual double support(const UnitVector3& dir) const = 0;
};

using BodyPtr = std::shared_ptr<const ConvexBody>;

/// Convex polytope given by its vertex list; the support function is the
/// maximum of the vertex dot products (the convex hull is implicit).
/// Requires at least 4 vertices that are not all coplanar.
class PolytopeBody final : public ConvexBody {
public:
    explicit PolytopeBody(std::vector<Vec3> vertices);

    double support(const UnitVector3& dir) const override;
    const std::vector<Vec3>& vertices() const { return vertices_; }

    /// Copy with every vertex shifted by offset.
    PolytopeBody translated(const Vec3& offset) const;

private:
    std::vector<Vec3> vertices_;
};

/// Support function given as a truncated real spherical-harmonic series
/// (orthonormal basis, degree-major order-minor coefficient layout).
class SupportSeriesBody final : public ConvexBody {
public:
    SupportSeriesBody(int lmax, std::vector<double> coeffs);

    double support(const UnitVector3& dir) const override;
    int lmax() const { return lmax_; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    /// Ball of the given radius centered at the origin.
    static SupportSeriesBody ball(double radius);

    /// Constant-width fixture h(u) = 1 + eps * P3(u.z): the odd degree-3
    /// term cancels in h(u) + h(-u), so the width is 1 in every direction.
    static SupportSeriesBody constant_width_p3(double eps);

private:
    int lmax_;
    std::vector<double> coeffs_;
};

/// The reflection -K of a wrapped body about the origin.
class ReflectedBody final : public ConvexBody {
public:
    explicit ReflectedBody(BodyPtr inner);
    double support(const UnitVector3& dir) const override;
    const BodyPtr& inner() const { return inner_; }

private:
    BodyPtr inner_;
};

/// The image QK of a wrapped body under an axis rotation Q:
/// h_{QK}(dir) = h_K(Q^{-1} dir).
class RotatedBody final : public ConvexBody {
public:
    RotatedBody(BodyPtr inner, const AxisRotation& rotation);
    double support(const UnitVector3& dir) const override;
    const BodyPtr& inner() const { return inner_; }
    const AxisRotation& rotation() const { return rotation_; }

private:
    BodyPtr inner_;
    AxisRotation rotation_;
    AxisRotation inverse_;
};

BodyPtr reflect(BodyPtr body);
BodyPtr rotated(BodyPtr body, const AxisRotation& q);

/// Width function (h(dir) + h(-dir)) / 2.
double width(const ConvexBody& body, const UnitVector3& dir);

/// Radial function of the polar dual, rho_{K*}(dir) = 1 / h_K(dir).
/// Throws OriginNotInteriorError when the support is not strictly positive.
double dual_radial(const ConvexBody& body, const UnitVector3& dir);

/// tau_{K*}(dir) = (rho_{K*}(dir)^2 + rho_{K*}(-dir)^2) / 2. Even in dir.
double tau_dual(const ConvexBody& body, const UnitVector3& dir);

/// True iff the minimum of the support over the grid is at least margin.
bool validate_origin_interior(const ConvexBody& body, const SphereGrid& grid, double margin);

/// Default origin-interior margin: 1e-6 times the maximum support on the grid.
double default_origin_margin(const ConvexBody& body, const SphereGrid& grid);

/// Shared validation grid, fibonacci_grid(2000, antipodal). Built once.
const SphereGrid& default_validation_grid();

/// Sampled convexity check for support oracles: along seeded random great
/// circles, h(t) + h''(t) >= -1e-6 with central differences of step 1e-3.
/// A necessary condition only; the shipped series fixtures satisfy it.
bool sampled_convexity_ok(const ConvexBody& body, int circles = 20,
                          std::uint64_t seed = 0x5eed5eedULL);

}  // namespace projcong
