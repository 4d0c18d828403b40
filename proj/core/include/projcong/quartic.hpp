#pragma once

#include <utility>
#include <vector>

namespace projcong {

/// All real roots of c4 x^4 + c3 x^3 + c2 x^2 + c1 x + c0, sorted ascending,
/// double roots reported twice. Every returned root x satisfies
/// |p(x)| <= 1e-9 * max|c_i| * max(1, |x|)^4. Requires c4 != 0.
/// Closed-form Ferrari factorization with Newton polishing on the original
/// polynomial; complex conjugate pairs are excluded.
std::vector<double> real_quartic_roots(double c4, double c3, double c2, double c1, double c0);

/// Real solutions of the width/tau system x + y = a, x^-2 + y^-2 = b with
/// x, y strictly inside (0, a), found through the equivalent quartic
/// b x^2 (a-x)^2 - (x-a)^2 - x^2 = 0. The pair list is closed under the
/// swap (x, y) <-> (y, x) and sorted by x ascending.
struct QuarticSystemSolution {
    double a{0.0};
    double b{0.0};
    std::vector<std::pair<double, double>> pairs;
    std::vector<double> residuals;  // |x^-2 + y^-2 - b| per pair
};

QuarticSystemSolution solve_width_tau_system(double a, double b);

}  // namespace projcong
