#include "projcong/sphere_grid.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace projcong {

namespace {

constexpr double kDuplicateChord = 1e-9;  // chord ~ angle for tolerances this small

bool near_duplicate(const std::vector<UnitVector3>& pts, const Vec3& candidate) {
    for (const auto& p : pts) {
        if (norm(p.vec() - candidate) <= kDuplicateChord) return true;
    }
    return false;
}

}  // namespace

SphereGrid fibonacci_grid(std::size_t n, bool antipodal) {
    if (n < 2) throw std::invalid_argument("fibonacci_grid: n must be >= 2");

    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));

    SphereGrid grid;
    grid.antipodal = antipodal;
    grid.directions.reserve(antipodal ? 2 * n : n);

    for (std::size_t i = 0; i < n; ++i) {
        const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(n);
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden_angle * static_cast<double>(i);
        const Vec3 p{r * std::cos(phi), r * std::sin(phi), z};
        if (!near_duplicate(grid.directions, p))
            grid.directions.push_back(UnitVector3::of(p));
    }

    if (antipodal) {
        const std::size_t base = grid.directions.size();
        for (std::size_t i = 0; i < base; ++i) {
            const Vec3 q = -grid.directions[i].vec();
            if (!near_duplicate(grid.directions, q))
                grid.directions.push_back(UnitVector3(q));
        }
        // Pair every direction with its antipode.
        const std::size_t m = grid.directions.size();
        grid.antipode.assign(m, m);
        for (std::size_t i = 0; i < m; ++i) {
            double best = std::numeric_limits<double>::infinity();
            std::size_t best_j = m;
            for (std::size_t j = 0; j < m; ++j) {
                const double d = norm(grid.directions[i].vec() + grid.directions[j].vec());
                if (d < best) {
                    best = d;
                    best_j = j;
                }
            }
            if (best > 1e-12)
                throw std::runtime_error("fibonacci_grid: antipodal closure failed");
            grid.antipode[i] = best_j;
        }
    }

    return grid;
}

}  // namespace projcong
