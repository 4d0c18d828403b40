#pragma once

#include "projcong/vec3.hpp"

namespace projcong {

/// Rotation about the line spanned by a unit axis. The turn is stored as a
/// fraction of pi: a fraction r means an angle of r*pi radians,
/// counterclockwise when looking down the axis. Canonical range [0, 2).
struct AxisRotation {
    UnitVector3 axis;
    double fraction{0.0};

    AxisRotation() = default;
    AxisRotation(const UnitVector3& axis_, double fraction_);

    double angle() const;
    AxisRotation inverse() const;
};

/// Maps an arbitrary fraction into the canonical range [0, 2).
double canonical_fraction(double fraction);

/// Folds a canonical fraction into [0, 1]: r and 2-r describe the same
/// unoriented turn, so only values up to a half revolution are needed.
double folded_fraction(double fraction);

/// Rodrigues rotation of x by an angle of fraction*pi about the axis:
///   x cos(r pi) + (axis x x) sin(r pi) + axis (axis . x)(1 - cos(r pi)).
Vec3 rotate(const UnitVector3& axis, double fraction, const Vec3& x);

inline Vec3 rotate(const AxisRotation& q, const Vec3& x) {
    return rotate(q.axis, q.fraction, x);
}

inline UnitVector3 rotate(const AxisRotation& q, const UnitVector3& x) {
    return UnitVector3(rotate(q.axis, q.fraction, x.vec()));
}

}  // namespace projcong
