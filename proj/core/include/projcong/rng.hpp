#pragma once

#include <cstdint>
#include <random>

#include "projcong/vec3.hpp"

namespace projcong {

/// Deterministic random source. All randomness in the project flows through
/// this wrapper: it draws raw 64-bit words from std::mt19937_64 (whose output
/// sequence is pinned by the standard) and derives doubles itself, so streams
/// reproduce bit-for-bit across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1), 53 bits of randomness.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Uniform in the closed ball of the given radius (rejection from the cube).
    Vec3 in_ball(double radius = 1.0) {
        while (true) {
            const Vec3 v{uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
            if (norm_squared(v) <= 1.0) return v * radius;
        }
    }

    /// Uniform direction on S^2.
    UnitVector3 unit_vector() {
        while (true) {
            const Vec3 v = in_ball();
            const double n2 = norm_squared(v);
            if (n2 > 1e-6) return UnitVector3::of(v);
        }
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace projcong
