#include "projcong/quartic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace projcong {

namespace {

double eval_quartic(double c4, double c3, double c2, double c1, double c0, double x) {
    return (((c4 * x + c3) * x + c2) * x + c1) * x + c0;
}

double eval_quartic_deriv(double c4, double c3, double c2, double c1, double x) {
    return ((4.0 * c4 * x + 3.0 * c3) * x + 2.0 * c2) * x + c1;
}

// Largest real root of w^3 + a w^2 + b w + c (always exists), Newton-polished.
double largest_cubic_root(double a, double b, double c) {
    const double p = b - a * a / 3.0;
    const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    const double disc = 0.25 * q * q + p * p * p / 27.0;

    double v;
    if (disc > 0.0) {
        const double t = -0.5 * q;
        const double s = std::sqrt(disc);
        const double big = (t >= 0.0) ? t + s : t - s;
        const double A = std::cbrt(big);
        v = (A != 0.0) ? A - p / (3.0 * A) : 0.0;
    } else {
        const double m = 2.0 * std::sqrt(std::max(0.0, -p / 3.0));
        double cos3phi = 0.0;
        if (p != 0.0 && m != 0.0) cos3phi = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
        const double phi = std::acos(cos3phi) / 3.0;
        v = m * std::cos(phi);  // phi in [0, pi/3], so this is the largest root
    }

    double w = v - a / 3.0;
    for (int it = 0; it < 3; ++it) {
        const double f = ((w + a) * w + b) * w + c;
        const double df = (3.0 * w + 2.0 * a) * w + b;
        if (df == 0.0) break;
        const double step = f / df;
        if (!std::isfinite(step)) break;
        w -= step;
    }
    return w;
}

// Appends the real roots of y^2 + B y + C, treating slightly negative
// discriminants (relative rounding scale) as a double root.
void append_quadratic_roots(double B, double C, std::vector<double>& out) {
    double disc = B * B - 4.0 * C;
    const double scale = B * B + 4.0 * std::abs(C);
    if (disc < 0.0) {
        if (disc < -1e-11 * scale) return;  // genuinely complex pair
        disc = 0.0;
    }
    const double s = std::sqrt(disc);
    const double qq = -0.5 * (B + (B >= 0.0 ? s : -s));
    double r1, r2;
    if (qq != 0.0) {
        r1 = qq;
        r2 = C / qq;
    } else {
        r1 = -0.5 * B + 0.5 * s;
        r2 = -0.5 * B - 0.5 * s;
    }
    out.push_back(r1);
    out.push_back(r2);
}

}  // namespace

std::vector<double> real_quartic_roots(double c4, double c3, double c2, double c1, double c0) {
    if (c4 == 0.0)
        throw std::invalid_argument("real_quartic_roots: leading coefficient is zero");
    for (double c : {c4, c3, c2, c1, c0}) {
        if (!std::isfinite(c))
            throw std::invalid_argument("real_quartic_roots: coefficients must be finite");
    }

    // Monic coefficients, then a root rescaling x = s u to keep them O(1).
    const double p3 = c3 / c4, p2 = c2 / c4, p1 = c1 / c4, p0 = c0 / c4;
    double s = std::max({std::abs(p3), std::sqrt(std::abs(p2)), std::cbrt(std::abs(p1)),
                         std::pow(std::abs(p0), 0.25)});
    if (s == 0.0) s = 1.0;
    const double q3 = p3 / s;
    const double q2 = p2 / (s * s);
    const double q1 = p1 / (s * s * s);
    const double q0 = p0 / (s * s * s * s);

    // Depressed quartic y^4 + P y^2 + Q y + R via u = y - q3/4.
    const double P = q2 - 3.0 * q3 * q3 / 8.0;
    const double Q = q1 - 0.5 * q3 * q2 + q3 * q3 * q3 / 8.0;
    const double R = q0 - 0.25 * q3 * q1 + q3 * q3 * q2 / 16.0 - 3.0 * q3 * q3 * q3 * q3 / 256.0;

    std::vector<double> ys;
    ys.reserve(4);
    if (std::abs(Q) <= 1e-14 * std::max({1.0, std::abs(P), std::abs(R)})) {
        // Biquadratic: z^2 + P z + R with y^2 = z.
        std::vector<double> zs;
        append_quadratic_roots(P, R, zs);
        for (double z : zs) {
            if (z < 0.0) {
                if (z < -1e-11 * std::max(1.0, std::abs(P) + std::abs(R))) continue;
                z = 0.0;
            }
            const double y = std::sqrt(z);
            ys.push_back(y);
            ys.push_back(-y);
        }
    } else {
        // Ferrari: factor into (y^2 + alpha y + beta)(y^2 - alpha y + gamma)
        // with w = alpha^2 the largest root of the resolvent cubic
        // w^3 + 2P w^2 + (P^2 - 4R) w - Q^2 = 0, positive since the cubic is
        // negative at w = 0.
        const double w = std::max(largest_cubic_root(2.0 * P, P * P - 4.0 * R, -Q * Q), 0.0);
        const double alpha = std::sqrt(w);
        if (alpha == 0.0) return {};  // defensively unreachable: |Q| > 0 here
        const double beta = 0.5 * (P + w - Q / alpha);
        const double gamma = 0.5 * (P + w + Q / alpha);
        append_quadratic_roots(alpha, beta, ys);
        append_quadratic_roots(-alpha, gamma, ys);
    }

    const double maxc =
        std::max({std::abs(c4), std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});
    std::vector<double> roots;
    roots.reserve(ys.size());
    for (double y : ys) {
        double x = s * (y - q3 / 4.0);
        for (int it = 0; it < 6; ++it) {
            const double f = eval_quartic(c4, c3, c2, c1, c0, x);
            const double df = eval_quartic_deriv(c4, c3, c2, c1, x);
            if (df == 0.0) break;
            const double step = f / df;
            if (!std::isfinite(step) || std::abs(step) > 0.5 * (1.0 + std::abs(x))) break;
            x -= step;
            if (step == 0.0) break;
        }
        const double bound = 1e-9 * maxc * std::pow(std::max(1.0, std::abs(x)), 4);
        if (std::abs(eval_quartic(c4, c3, c2, c1, c0, x)) <= bound) roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

QuarticSystemSolution solve_width_tau_system(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("solve_width_tau_system: a and b must be positive");

    QuarticSystemSolution sol;
    sol.a = a;
    sol.b = b;

    // b x^2 (a-x)^2 - (x-a)^2 - x^2, expanded.
    const double c4 = b;
    const double c3 = -2.0 * a * b;
    const double c2 = a * a * b - 2.0;
    const double c1 = 2.0 * a;
    const double c0 = -a * a;
    const auto g = [&](double x) { return eval_quartic(c4, c3, c2, c1, c0, x); };

    std::vector<double> candidates = real_quartic_roots(c4, c3, c2, c1, c0);

    // Bisection fallback over a sign-change scan of (0, a), guarding against
    // conditioning failures of the closed form.
    constexpr int kCells = 10000;
    double x_prev = a / kCells;
    double g_prev = g(x_prev);
    for (int i = 2; i < kCells; ++i) {
        const double x_next = a * static_cast<double>(i) / kCells;
        const double g_next = g(x_next);
        if (g_prev == 0.0) candidates.push_back(x_prev);
        if ((g_prev < 0.0 && g_next > 0.0) || (g_prev > 0.0 && g_next < 0.0)) {
            double lo = x_prev, hi = x_next;
            double glo = g_prev;
            for (int it = 0; it < 100; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double gm = g(mid);
                if ((glo < 0.0) == (gm < 0.0)) {
                    lo = mid;
                    glo = gm;
                } else {
                    hi = mid;
                }
            }
            candidates.push_back(0.5 * (lo + hi));
        }
        x_prev = x_next;
        g_prev = g_next;
    }

    // The root set is symmetric under x <-> a - x; make the candidate set so.
    const std::size_t base = candidates.size();
    for (std::size_t i = 0; i < base; ++i) candidates.push_back(a - candidates[i]);

    std::sort(candidates.begin(), candidates.end());
    std::vector<double> kept;
    for (double x : candidates) {
        if (!(x > 0.0) || !(x < a)) continue;
        if (!kept.empty() && x - kept.back() < 1e-7 * a) continue;  // double-root dedup
        kept.push_back(x);
    }

    const double residual_bound = 1e-8 * std::max(1.0, b);
    for (double x : kept) {
        const double y = a - x;
        const double residual = std::abs(1.0 / (x * x) + 1.0 / (y * y) - b);
        if (residual <= residual_bound) {
            sol.pairs.emplace_back(x, y);
            sol.residuals.push_back(residual);
        }
    }
    return sol;
}

}  // namespace projcong
