#pragma once

#include <vector>

#include "projcong/body.hpp"
#include "projcong/frame.hpp"

namespace projcong {

/// Support values of a body sampled along a great circle: values[j] is the
/// support at circle_point(frame, 2 pi j / n). n is even and >= 16 so that
/// sample j + n/2 is exactly the antipode of sample j.
struct CircularProfile {
    GreatCircleFrame frame;
    std::vector<double> values;

    int n() const { return static_cast<int>(values.size()); }
};

/// Samples the support function along the frame's great circle. The second
/// half of the circle is evaluated at the exact negations of the first half,
/// so the antipodal pairing j <-> j + n/2 holds bit-for-bit.
CircularProfile profile(const ConvexBody& body, const GreatCircleFrame& frame, int n);

/// Sup-norm mismatch max_j |a[j] - b[(j + shift) mod n]| between two profiles
/// over the same circle.
double residual_at(const CircularProfile& a, const CircularProfile& b, int shift);

/// A rotation angle carrying profile b onto profile a:
/// a(t) ~ b(t + angle) in frame coordinates, counterclockwise positive.
/// angle is canonical in [0, 2 pi); fraction = angle / pi.
struct RotationMatch {
    double angle{0.0};
    double fraction{0.0};
    double residual{0.0};

    /// Fraction folded into [0, 1]; r and 2 - r describe the same unoriented
    /// turn, which is how direction sets are indexed.
    double folded() const;
};

/// All rotation angles (within tol, relative to the profile maximum) carrying
/// b onto a. Discrete shift candidates are refined by a parabolic fit of the
/// residual over the neighboring shifts; matches closer than one sample step
/// are merged, keeping the smaller residual. Sorted by angle ascending.
std::vector<RotationMatch> match_rotations(const CircularProfile& a, const CircularProfile& b,
                                           double tol);

enum class DirectionTag { F0, F1, Fr, Disk, NoMatch };

const char* to_string(DirectionTag tag);

/// Per-direction classification of the rotation relation between the two
/// projection profiles orthogonal to a pole.
struct DirectionClass {
    DirectionTag tag{DirectionTag::NoMatch};
    std::vector<RotationMatch> matches;
    double best_residual{0.0};  // min over all shifts, matched or not
    double best_angle{0.0};     // angle attaining best_residual

    /// True when the direction is consistent with the given rotation angle:
    /// tagged Disk, or some match lies within tol of the angle (mod 2 pi).
    bool permits_angle(double angle, double tol) const;
};

struct ClassifyParams {
    int circle_samples{512};
    double match_tol{1e-8};

    /// Angular bucket for the F0 / F1 tags.
    double angular_tol() const;
};

/// Builds both profiles at frame_for(pole) and classifies the direction.
/// Tag precedence: Disk (all shifts match, or the reference profile is
/// constant to within tol) > F0 > F1 > Fr > NoMatch.
DirectionClass classify_direction(const ConvexBody& K, const ConvexBody& L,
                                  const UnitVector3& pole, const ClassifyParams& params = {});

}  // namespace projcong
