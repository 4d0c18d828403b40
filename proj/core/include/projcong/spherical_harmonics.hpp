#pragma once

#include <span>

#include "projcong/vec3.hpp"

namespace projcong {

/// Real orthonormal spherical harmonic Y_{l,m} at a unit direction.
/// Convention: no Condon-Shortley phase;
///   m = 0:  Y_{l,0} = N_{l,0} P_l(z)
///   m > 0:  Y_{l,m} = sqrt(2) N_{l,m} P_l^m(z) cos(m phi)
///   m < 0:  Y_{l,m} = sqrt(2) N_{l,|m|} P_l^|m|(z) sin(|m| phi)
/// with N_{l,m} the orthonormalization factor, z = u.z and
/// phi = atan2(u.y, u.x).
double real_spherical_harmonic(int l, int m, const UnitVector3& u);

/// Evaluates a truncated real spherical-harmonic series. Coefficients are
/// laid out degree-major, order-minor: index(l, m) = l*l + l + m, so the
/// span must hold (lmax+1)^2 values.
double evaluate_harmonic_series(int lmax, std::span<const double> coeffs, const UnitVector3& u);

}  // namespace projcong
