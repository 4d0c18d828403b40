#include "projcong/radon.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "projcong/frame.hpp"

namespace projcong {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double circle_average(const DirectionFn& f, const GreatCircleFrame& frame, int nquad) {
    double sum = 0.0;
    if (nquad % 2 == 0) {
        const int half = nquad / 2;
        for (int j = 0; j < half; ++j) {
            const UnitVector3 u = circle_point(frame, kTwoPi * j / nquad);
            sum += f(u) + f(-u);
        }
    } else {
        for (int j = 0; j < nquad; ++j)
            sum += f(circle_point(frame, kTwoPi * j / nquad));
    }
    return sum / nquad;
}

}  // namespace

void SphericalFunctionSamples::even_symmetrize() {
    if (!grid.antipodal)
        throw std::invalid_argument("even_symmetrize: grid must be antipodal");
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        out[i] = 0.5 * (values[i] + values[grid.antipode[i]]);
    values = std::move(out);
}

SphericalFunctionSamples sample_function(const DirectionFn& f, const SphereGrid& grid) {
    SphericalFunctionSamples s;
    s.grid = grid;
    s.values.reserve(grid.size());
    for (const auto& u : grid.directions) s.values.push_back(f(u));
    return s;
}

RadonResult radon_transform(const DirectionFn& f, const SphereGrid& grid, int nquad) {
    if (nquad < 64) throw std::invalid_argument("radon_transform: nquad must be >= 64");
    RadonResult result;
    result.grid = grid;
    result.quadrature_points = nquad;
    result.values.reserve(grid.size());
    for (const auto& pole : grid.directions)
        result.values.push_back(circle_average(f, frame_for(pole), nquad));
    return result;
}

double dual_section_area(const ConvexBody& body, const UnitVector3& pole, int n) {
    if (n < 64) throw std::invalid_argument("dual_section_area: n must be >= 64");
    const GreatCircleFrame frame = frame_for(pole);
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
        const double rho = dual_radial(body, circle_point(frame, kTwoPi * j / n));
        sum += rho * rho;
    }
    return 0.5 * (kTwoPi / n) * sum;
}

TauDifferenceResult tau_difference_check(const ConvexBody& K, const ConvexBody& L,
                                         const SphereGrid& grid, int nquad) {
    if (!grid.antipodal)
        throw std::invalid_argument("tau_difference_check: grid must be antipodal");

    const DirectionFn diff = [&](const UnitVector3& u) {
        return tau_dual(K, u) - tau_dual(L, u);
    };

    TauDifferenceResult out;
    for (const auto& u : grid.directions)
        out.max_tau_diff = std::max(out.max_tau_diff, std::abs(diff(u)));

    const RadonResult transformed = radon_transform(diff, grid, nquad);
    for (double v : transformed.values)
        out.max_radon_residual = std::max(out.max_radon_residual, std::abs(v));
    return out;
}

}  // namespace projcong
