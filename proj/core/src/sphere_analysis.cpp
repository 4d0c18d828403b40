#include "projcong/sphere_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "projcong/parallel.hpp"

namespace projcong {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <typename Fn>
SpreadResult circle_spread(int n, double tol, Fn&& value_at) {
    if (n < 16) throw std::invalid_argument("circle spread: need n >= 16 samples");
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
        const double v = value_at(kTwoPi * j / n);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        sum += v;
    }
    SpreadResult r;
    r.mean = sum / n;
    r.spread = (hi - lo) / r.mean;
    r.constant = r.spread <= tol;
    return r;
}

}  // namespace

SpreadResult constant_width_test(const ConvexBody& body, const GreatCircleFrame& frame, int n,
                                 double tol) {
    return circle_spread(n, tol, [&](double t) { return width(body, circle_point(frame, t)); });
}

SpreadResult constant_tau_test(const ConvexBody& body, const GreatCircleFrame& frame, int n,
                               double tol) {
    return circle_spread(n, tol, [&](double t) { return tau_dual(body, circle_point(frame, t)); });
}

const char* to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Equal: return "Equal";
        case Verdict::ReflectedEqual: return "ReflectedEqual";
        case Verdict::Violation: return "Violation";
    }
    return "?";
}

const char* to_string(TheoremOutcome outcome) {
    switch (outcome) {
        case TheoremOutcome::Equal: return "Equal";
        case TheoremOutcome::ReflectedEqual: return "ReflectedEqual";
        case TheoremOutcome::MixedEvidence: return "MixedEvidence";
        case TheoremOutcome::HypothesisViolated: return "HypothesisViolated";
    }
    return "?";
}

DecompositionReport decompose_sphere(const ConvexBody& K, const ConvexBody& L,
                                     const SphereGrid& grid, const DecompositionParams& params) {
    if (!grid.antipodal)
        throw std::invalid_argument("decompose_sphere: grid must be antipodal");

    DecompositionReport report;
    report.grid = grid;
    report.directions.resize(grid.size());

    const ClassifyParams cls_params = params.classify();
    parallel_for(grid.size(), params.threads, [&](std::size_t i) {
        DirectionRecord rec;
        rec.pole = grid.directions[i];
        rec.cls = classify_direction(K, L, rec.pole, cls_params);
        const GreatCircleFrame frame = frame_for(rec.pole);
        const SpreadResult w =
            constant_width_test(K, frame, params.circle_samples, params.spread_tol);
        const SpreadResult t = constant_tau_test(K, frame, params.circle_samples, params.spread_tol);
        rec.width_spread = w.spread;
        rec.tau_spread = t.spread;
        rec.mean_width = w.mean;
        rec.in_sigma = w.constant;
        rec.in_lambda = t.constant;
        report.directions[i] = std::move(rec);
    });

    const double ang_tol = cls_params.angular_tol();
    bool equal_ok = true;
    bool reflected_ok = true;
    report.coverage_gol = true;
    report.coverage_mod_gol = true;

    int sigma_count = 0;
    double sigma_width_sum = 0.0;
    std::vector<UnitVector3> no_match;
    std::vector<UnitVector3> blockers;

    for (const auto& rec : report.directions) {
        const bool core_tag = rec.cls.tag == DirectionTag::F0 ||
                              rec.cls.tag == DirectionTag::F1 ||
                              rec.cls.tag == DirectionTag::Disk;
        if (!(core_tag || rec.in_sigma)) report.coverage_gol = false;
        if (!(core_tag || rec.in_lambda)) report.coverage_mod_gol = false;

        const bool permits0 = rec.cls.permits_angle(0.0, ang_tol);
        const bool permits_pi = rec.cls.permits_angle(std::numbers::pi, ang_tol);
        equal_ok = equal_ok && permits0;
        reflected_ok = reflected_ok && permits_pi;
        if (rec.cls.tag == DirectionTag::NoMatch) no_match.push_back(rec.pole);
        if (!permits0 || !permits_pi) blockers.push_back(rec.pole);

        if (rec.in_sigma) {
            ++sigma_count;
            sigma_width_sum += rec.mean_width;
        }
    }

    if (sigma_count >= 2) report.common_width = sigma_width_sum / sigma_count;

    if (equal_ok) {
        report.verdict = Verdict::Equal;
    } else if (reflected_ok) {
        report.verdict = Verdict::ReflectedEqual;
    } else {
        report.verdict = Verdict::Violation;
        report.violation_poles = no_match.empty() ? blockers : no_match;
    }
    return report;
}

TheoremVerdict verify_theorem(const DecompositionReport& report) {
    std::vector<UnitVector3> no_match;
    for (const auto& rec : report.directions) {
        if (rec.cls.tag == DirectionTag::NoMatch) no_match.push_back(rec.pole);
    }
    if (!no_match.empty()) return {TheoremOutcome::HypothesisViolated, std::move(no_match)};
    switch (report.verdict) {
        case Verdict::Equal: return {TheoremOutcome::Equal, {}};
        case Verdict::ReflectedEqual: return {TheoremOutcome::ReflectedEqual, {}};
        case Verdict::Violation: break;
    }
    return {TheoremOutcome::MixedEvidence, report.violation_poles};
}

TheoremVerdict verify_theorem(const ConvexBody& K, const ConvexBody& L, const SphereGrid& grid,
                              const DecompositionParams& params) {
    return verify_theorem(decompose_sphere(K, L, grid, params));
}

OrbitReport orbit_covering_radius(double r, int steps) {
    if (steps < 1) throw std::invalid_argument("orbit_covering_radius: steps must be >= 1");
    if (!std::isfinite(r)) throw std::invalid_argument("orbit_covering_radius: fraction not finite");

    // Angles are reduced as fractions of pi (k*r mod 2) before scaling, so
    // dyadic fractions like r = 1/2 stay exact through the reduction.
    std::vector<double> angles(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) {
        double frac = std::fmod(static_cast<double>(k) * r, 2.0);
        if (frac < 0.0) frac += 2.0;
        angles[static_cast<std::size_t>(k)] = frac * std::numbers::pi;
    }
    std::sort(angles.begin(), angles.end());

    double largest = angles.front() + kTwoPi - angles.back();
    for (std::size_t i = 1; i < angles.size(); ++i)
        largest = std::max(largest, angles[i] - angles[i - 1]);

    OrbitReport report;
    report.fraction = r;
    report.steps = steps;
    report.covering_radius = largest;
    return report;
}

}  // namespace projcong
