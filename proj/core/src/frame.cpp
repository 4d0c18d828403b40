#include "projcong/frame.hpp"

#include <cmath>

namespace projcong {

GreatCircleFrame frame_for(const UnitVector3& pole) {
    const Vec3& p = pole.vec();
    const double ax = std::abs(p.x), ay = std::abs(p.y), az = std::abs(p.z);
    Vec3 a{1.0, 0.0, 0.0};
    if (ay < ax && ay <= az) {
        a = {0.0, 1.0, 0.0};
    } else if (az < ax && az < ay) {
        a = {0.0, 0.0, 1.0};
    }
    const UnitVector3 e1 = UnitVector3::of(cross(a, p));
    const UnitVector3 e2 = UnitVector3::of(cross(p, e1.vec()));
    return {pole, e1, e2};
}

UnitVector3 circle_point(const GreatCircleFrame& frame, double t) {
    return UnitVector3(frame.e1.vec() * std::cos(t) + frame.e2.vec() * std::sin(t));
}

bool same_frame(const GreatCircleFrame& a, const GreatCircleFrame& b, double tol) {
    return norm(a.pole.vec() - b.pole.vec()) <= tol &&
           norm(a.e1.vec() - b.e1.vec()) <= tol &&
           norm(a.e2.vec() - b.e2.vec()) <= tol;
}

}  // namespace projcong
