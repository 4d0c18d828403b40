#include "projcong/congruence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace projcong {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double profile_peak(const CircularProfile& p) {
    double m = -std::numeric_limits<double>::infinity();
    for (double v : p.values) m = std::max(m, v);
    return m;
}

void require_aligned(const CircularProfile& a, const CircularProfile& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("profiles have different sample counts");
    if (!same_frame(a.frame, b.frame))
        throw std::invalid_argument("profiles use different frames");
}

std::vector<double> residual_array(const CircularProfile& a, const CircularProfile& b) {
    const int n = a.n();
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) out[static_cast<std::size_t>(s)] = residual_at(a, b, s);
    return out;
}

// Sub-sample shift from a parabola through the residuals at s-1, s, s+1.
// An exact match is left untouched: the residual minimum is a kink there and
// the parabola vertex would otherwise wander off a perfect alignment.
double refined_shift(const std::vector<double>& res, int s, double zero_floor) {
    const int n = static_cast<int>(res.size());
    const double r0 = res[static_cast<std::size_t>(s)];
    if (r0 <= zero_floor) return static_cast<double>(s);
    const double rm = res[static_cast<std::size_t>((s - 1 + n) % n)];
    const double rp = res[static_cast<std::size_t>((s + 1) % n)];
    const double denom = rm - 2.0 * r0 + rp;
    if (denom <= 0.0) return static_cast<double>(s);
    const double delta = std::clamp(0.5 * (rm - rp) / denom, -0.5, 0.5);
    return static_cast<double>(s) + delta;
}

double shift_to_angle(double shift, int n) {
    double m = std::fmod(shift, static_cast<double>(n));
    if (m < 0.0) m += static_cast<double>(n);
    double angle = kTwoPi * m / static_cast<double>(n);
    if (angle >= kTwoPi) angle -= kTwoPi;
    return angle;
}

std::vector<RotationMatch> matches_from_residuals(const std::vector<double>& res, int n,
                                                  double thresh, double zero_floor) {
    std::vector<RotationMatch> raw;
    for (int s = 0; s < n; ++s) {
        if (res[static_cast<std::size_t>(s)] <= thresh) {
            RotationMatch m;
            m.angle = shift_to_angle(refined_shift(res, s, zero_floor), n);
            m.fraction = m.angle / std::numbers::pi;
            m.residual = res[static_cast<std::size_t>(s)];
            raw.push_back(m);
        }
    }
    if (raw.empty()) return raw;

    std::sort(raw.begin(), raw.end(),
              [](const RotationMatch& x, const RotationMatch& y) { return x.angle < y.angle; });

    // Merge refined angles closer than one sample step (with a small slack so
    // the exact step spacing of an all-shifts match is not collapsed).
    const double merge_tol = 0.999 * kTwoPi / static_cast<double>(n);
    std::vector<RotationMatch> merged;
    for (const auto& m : raw) {
        if (!merged.empty() && m.angle - merged.back().angle < merge_tol) {
            if (m.residual < merged.back().residual) merged.back() = m;
        } else {
            merged.push_back(m);
        }
    }
    if (merged.size() > 1) {
        const double wrap_gap = merged.front().angle + kTwoPi - merged.back().angle;
        if (wrap_gap < merge_tol) {
            if (merged.back().residual < merged.front().residual)
                merged.front() = merged.back();
            merged.pop_back();
        }
    }
    return merged;
}

double circular_distance(double a, double b) {
    double d = std::abs(a - b);
    d = std::fmod(d, kTwoPi);
    return std::min(d, kTwoPi - d);
}

}  // namespace

CircularProfile profile(const ConvexBody& body, const GreatCircleFrame& frame, int n) {
    if (n < 16 || n % 2 != 0)
        throw std::invalid_argument("profile: sample count must be even and >= 16");
    CircularProfile p;
    p.frame = frame;
    p.values.resize(static_cast<std::size_t>(n));
    const int half = n / 2;
    for (int j = 0; j < half; ++j) {
        const UnitVector3 u = circle_point(frame, kTwoPi * j / n);
        p.values[static_cast<std::size_t>(j)] = body.support(u);
        p.values[static_cast<std::size_t>(j + half)] = body.support(-u);
    }
    return p;
}

double residual_at(const CircularProfile& a, const CircularProfile& b, int shift) {
    require_aligned(a, b);
    const int n = a.n();
    int s = shift % n;
    if (s < 0) s += n;
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
        const int k = j + s < n ? j + s : j + s - n;
        worst = std::max(worst, std::abs(a.values[static_cast<std::size_t>(j)] -
                                         b.values[static_cast<std::size_t>(k)]));
    }
    return worst;
}

double RotationMatch::folded() const { return folded_fraction(fraction); }

std::vector<RotationMatch> match_rotations(const CircularProfile& a, const CircularProfile& b,
                                           double tol) {
    require_aligned(a, b);
    const int n = a.n();
    const double scale = std::max(profile_peak(a), profile_peak(b));
    const auto res = residual_array(a, b);
    return matches_from_residuals(res, n, tol * scale, 1e-12 * scale);
}

const char* to_string(DirectionTag tag) {
    switch (tag) {
        case DirectionTag::F0: return "F0";
        case DirectionTag::F1: return "F1";
        case DirectionTag::Fr: return "Fr";
        case DirectionTag::Disk: return "Disk";
        case DirectionTag::NoMatch: return "NoMatch";
    }
    return "?";
}

bool DirectionClass::permits_angle(double angle, double tol) const {
    if (tag == DirectionTag::Disk) return true;
    for (const auto& m : matches) {
        if (circular_distance(m.angle, angle) <= tol) return true;
    }
    return false;
}

double ClassifyParams::angular_tol() const {
    return 1.5 * kTwoPi / static_cast<double>(circle_samples);
}

DirectionClass classify_direction(const ConvexBody& K, const ConvexBody& L,
                                  const UnitVector3& pole, const ClassifyParams& params) {
    const GreatCircleFrame frame = frame_for(pole);
    const CircularProfile pa = profile(K, frame, params.circle_samples);
    const CircularProfile pb = profile(L, frame, params.circle_samples);
    const int n = pa.n();

    const double scale = std::max(profile_peak(pa), profile_peak(pb));
    const double thresh = params.match_tol * scale;
    const auto res = residual_array(pa, pb);

    DirectionClass cls;
    cls.matches = matches_from_residuals(res, n, thresh, 1e-12 * scale);

    int best_shift = 0;
    int candidates = 0;
    for (int s = 0; s < n; ++s) {
        if (res[static_cast<std::size_t>(s)] < res[static_cast<std::size_t>(best_shift)])
            best_shift = s;
        if (res[static_cast<std::size_t>(s)] <= thresh) ++candidates;
    }
    cls.best_residual = res[static_cast<std::size_t>(best_shift)];
    cls.best_angle = shift_to_angle(refined_shift(res, best_shift, 1e-12 * scale), n);

    const auto minmax = std::minmax_element(pa.values.begin(), pa.values.end());
    const double ref_spread = *minmax.second - *minmax.first;

    const double ang_tol = params.angular_tol();
    if (ref_spread < params.match_tol * profile_peak(pa) || candidates == n) {
        cls.tag = DirectionTag::Disk;
    } else if (std::any_of(cls.matches.begin(), cls.matches.end(), [&](const RotationMatch& m) {
                   return circular_distance(m.angle, 0.0) <= ang_tol;
               })) {
        cls.tag = DirectionTag::F0;
    } else if (std::any_of(cls.matches.begin(), cls.matches.end(), [&](const RotationMatch& m) {
                   return std::abs(m.angle - std::numbers::pi) <= ang_tol;
               })) {
        cls.tag = DirectionTag::F1;
    } else if (!cls.matches.empty()) {
        cls.tag = DirectionTag::Fr;
    } else {
        cls.tag = DirectionTag::NoMatch;
    }
    return cls;
}

}  // namespace projcong
