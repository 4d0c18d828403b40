#include "projcong/spherical_harmonics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace projcong {

namespace {

constexpr double kInvSqrt4Pi = 0.28209479177387814;  // 1/sqrt(4 pi)

// Orthonormalized associated Legendre column N(l,m) P_l^m(z) for l = m..lmax,
// built with the standard stable recurrence (no Condon-Shortley phase).
void normalized_legendre_column(int m, int lmax, double z, double s, std::vector<double>& out) {
    out.assign(static_cast<std::size_t>(lmax - m + 1), 0.0);

    double pmm = kInvSqrt4Pi;
    for (int k = 1; k <= m; ++k)
        pmm *= s * std::sqrt((2.0 * k + 1.0) / (2.0 * k));
    out[0] = pmm;
    if (lmax == m) return;

    double p_prev = pmm;
    double p_curr = z * std::sqrt(2.0 * m + 3.0) * pmm;
    out[1] = p_curr;
    for (int l = m + 2; l <= lmax; ++l) {
        const double li = static_cast<double>(l);
        const double mi = static_cast<double>(m);
        const double a = std::sqrt((4.0 * li * li - 1.0) / (li * li - mi * mi));
        const double b = std::sqrt((2.0 * li + 1.0) * ((li - 1.0) * (li - 1.0) - mi * mi) /
                                   ((2.0 * li - 3.0) * (li * li - mi * mi)));
        const double p_next = z * a * p_curr - b * p_prev;
        out[static_cast<std::size_t>(l - m)] = p_next;
        p_prev = p_curr;
        p_curr = p_next;
    }
}

}  // namespace

double real_spherical_harmonic(int l, int m, const UnitVector3& u) {
    if (l < 0 || std::abs(m) > l)
        throw std::invalid_argument("real_spherical_harmonic: require l >= 0 and |m| <= l");
    const double z = u.z();
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = std::atan2(u.y(), u.x());
    const int ma = std::abs(m);

    std::vector<double> col;
    normalized_legendre_column(ma, l, z, s, col);
    const double p = col.back();
    if (m == 0) return p;
    const double azimuthal = (m > 0) ? std::cos(ma * phi) : std::sin(ma * phi);
    return std::numbers::sqrt2 * p * azimuthal;
}

double evaluate_harmonic_series(int lmax, std::span<const double> coeffs, const UnitVector3& u) {
    if (lmax < 0) throw std::invalid_argument("evaluate_harmonic_series: lmax must be >= 0");
    const auto expected = static_cast<std::size_t>((lmax + 1) * (lmax + 1));
    if (coeffs.size() != expected)
        throw std::invalid_argument("evaluate_harmonic_series: coefficient count must be (lmax+1)^2");

    const double z = u.z();
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = std::atan2(u.y(), u.x());

    double sum = 0.0;
    std::vector<double> col;
    for (int m = 0; m <= lmax; ++m) {
        normalized_legendre_column(m, lmax, z, s, col);
        if (m == 0) {
            for (int l = 0; l <= lmax; ++l)
                sum += coeffs[static_cast<std::size_t>(l * l + l)] * col[static_cast<std::size_t>(l)];
        } else {
            const double c = std::numbers::sqrt2 * std::cos(m * phi);
            const double sn = std::numbers::sqrt2 * std::sin(m * phi);
            for (int l = m; l <= lmax; ++l) {
                const double p = col[static_cast<std::size_t>(l - m)];
                sum += coeffs[static_cast<std::size_t>(l * l + l + m)] * c * p;
                sum += coeffs[static_cast<std::size_t>(l * l + l - m)] * sn * p;
            }
        }
    }
    return sum;
}

}  // namespace projcong
