#pragma once

#include <functional>
#include <vector>

#include "projcong/body.hpp"
#include "projcong/sphere_grid.hpp"

namespace projcong {

using DirectionFn = std::function<double(const UnitVector3&)>;

/// A function on S^2 sampled over a grid, values aligned with grid order.
struct SphericalFunctionSamples {
    SphereGrid grid;
    std::vector<double> values;

    /// Averages each value with its antipodal partner. After this call
    /// value(u) == value(-u) holds exactly for paired grid entries.
    /// Requires an antipodal grid.
    void even_symmetrize();
};

SphericalFunctionSamples sample_function(const DirectionFn& f, const SphereGrid& grid);

/// Forward spherical (Funk) Radon transform at grid resolution.
struct RadonResult {
    SphereGrid grid;
    std::vector<double> values;
    int quadrature_points{0};
};

/// (Rf)(pole) = average of f over nquad uniform points of the great circle
/// orthogonal to pole. Normalized so constants are fixed points. For even
/// nquad the second half-circle is sampled at exact negations of the first,
/// so odd integrands cancel to rounding. Requires nquad >= 64.
RadonResult radon_transform(const DirectionFn& f, const SphereGrid& grid, int nquad);

/// Area of the polar dual's central section orthogonal to pole, by the polar
/// coordinate formula: (1/2) * (2 pi / n) * sum_j rho_dual(circle_point_j)^2.
double dual_section_area(const ConvexBody& body, const UnitVector3& pole, int n);

/// Residuals of the section-area argument: the Radon transform of the even
/// function tau_K* - tau_L* alongside the pointwise difference itself.
struct TauDifferenceResult {
    double max_radon_residual{0.0};
    double max_tau_diff{0.0};
};

TauDifferenceResult tau_difference_check(const ConvexBody& K, const ConvexBody& L,
                                         const SphereGrid& grid, int nquad);

}  // namespace projcong
