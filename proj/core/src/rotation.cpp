#include "projcong/rotation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace projcong {

double canonical_fraction(double fraction) {
    if (!std::isfinite(fraction))
        throw std::invalid_argument("canonical_fraction: fraction is not finite");
    double r = std::fmod(fraction, 2.0);
    if (r < 0.0) r += 2.0;
    if (r == 2.0) r = 0.0;
    return r;
}

double folded_fraction(double fraction) {
    const double r = canonical_fraction(fraction);
    return std::min(r, 2.0 - r);
}

AxisRotation::AxisRotation(const UnitVector3& axis_, double fraction_)
    : axis(axis_), fraction(canonical_fraction(fraction_)) {}

double AxisRotation::angle() const { return fraction * std::numbers::pi; }

AxisRotation AxisRotation::inverse() const {
    return AxisRotation(axis, fraction == 0.0 ? 0.0 : 2.0 - fraction);
}

Vec3 rotate(const UnitVector3& axis, double fraction, const Vec3& x) {
    if (!std::isfinite(fraction))
        throw std::invalid_argument("rotate: fraction is not finite");
    const double angle = fraction * std::numbers::pi;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const Vec3& a = axis.vec();
    return x * c + cross(a, x) * s + a * (dot(a, x) * (1.0 - c));
}

}  // namespace projcong
