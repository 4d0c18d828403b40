#pragma once

#include <optional>
#include <vector>

#include "projcong/body.hpp"
#include "projcong/congruence.hpp"
#include "projcong/frame.hpp"
#include "projcong/sphere_grid.hpp"

namespace projcong {

/// Outcome of a constancy test along a great circle: spread is
/// (max - min) / mean over the circle samples, a scale-free measure.
struct SpreadResult {
    bool constant{false};
    double spread{0.0};
    double mean{0.0};
};

/// Tests whether the body's projection orthogonal to the frame's pole has
/// constant width, by sampling the width function along the great circle.
SpreadResult constant_width_test(const ConvexBody& body, const GreatCircleFrame& frame, int n,
                                 double tol);

/// Tests whether tau of the polar dual is constant along the great circle.
SpreadResult constant_tau_test(const ConvexBody& body, const GreatCircleFrame& frame, int n,
                               double tol);

struct DirectionRecord {
    UnitVector3 pole;
    DirectionClass cls;
    double width_spread{0.0};
    double tau_spread{0.0};
    double mean_width{0.0};
    bool in_sigma{false};
    bool in_lambda{false};
};

enum class Verdict { Equal, ReflectedEqual, Violation };

const char* to_string(Verdict verdict);

struct DecompositionParams {
    int circle_samples{512};
    double match_tol{1e-8};
    double spread_tol{1e-7};
    unsigned threads{1};

    ClassifyParams classify() const { return {circle_samples, match_tol}; }
};

/// Whole-sphere decomposition: every grid direction is classified against the
/// rotation-match taxonomy and flagged for membership in the constant-width
/// and constant-tau direction sets; the coverage booleans record whether the
/// union of {F0, F1, Disk} with each set exhausts the grid.
struct DecompositionReport {
    SphereGrid grid;
    std::vector<DirectionRecord> directions;
    bool coverage_gol{false};
    bool coverage_mod_gol{false};
    std::optional<double> common_width;
    Verdict verdict{Verdict::Violation};
    std::vector<UnitVector3> violation_poles;
};

/// Requires an antipodal grid. Per-direction work is parallelized up to
/// params.threads; assembly is in grid order, so the report is deterministic.
/// Verdict: Equal when every direction permits angle 0, else ReflectedEqual
/// when every direction permits pi, else Violation with the offending poles.
DecompositionReport decompose_sphere(const ConvexBody& K, const ConvexBody& L,
                                     const SphereGrid& grid, const DecompositionParams& params = {});

enum class TheoremOutcome { Equal, ReflectedEqual, MixedEvidence, HypothesisViolated };

const char* to_string(TheoremOutcome outcome);

struct TheoremVerdict {
    TheoremOutcome outcome{TheoremOutcome::HypothesisViolated};
    std::vector<UnitVector3> poles;  // offending directions, empty for the two clean outcomes
};

/// End-to-end check of the rotation-congruence alternative: directions with
/// no rotation match violate the hypothesis; otherwise the verdict is Equal
/// or ReflectedEqual, and evidence that is exclusive to interior angles in
/// some directions but to 0 or pi in others is reported as MixedEvidence.
TheoremVerdict verify_theorem(const DecompositionReport& report);
TheoremVerdict verify_theorem(const ConvexBody& K, const ConvexBody& L, const SphereGrid& grid,
                              const DecompositionParams& params = {});

/// Largest gap (radians) between consecutive points of the rotation orbit
/// { k * r * pi mod 2 pi : k = 0..steps-1 } on the circle.
struct OrbitReport {
    double fraction{0.0};
    int steps{0};
    double covering_radius{0.0};
};

OrbitReport orbit_covering_radius(double r, int steps);

}  // namespace projcong
