#pragma once

#include "projcong/vec3.hpp"

namespace projcong {

/// Orthonormal right-handed chart for the great circle orthogonal to a pole:
/// e1 . pole = e2 . pole = e1 . e2 = 0 and e1 x e2 = pole.
struct GreatCircleFrame {
    UnitVector3 pole;
    UnitVector3 e1;
    UnitVector3 e2;
};

/// Deterministic frame rule: a is the standard basis vector whose component
/// in the pole has smallest absolute value (ties broken in x < y < z order),
/// e1 = normalize(a x pole), e2 = pole x e1.
GreatCircleFrame frame_for(const UnitVector3& pole);

/// Point cos(t) e1 + sin(t) e2 on the great circle.
UnitVector3 circle_point(const GreatCircleFrame& frame, double t);

bool same_frame(const GreatCircleFrame& a, const GreatCircleFrame& b, double tol = 1e-12);

}  // namespace projcong
