#pragma once

#include <cmath>
#include <stdexcept>

namespace projcong {

struct Vec3 {
    double x{0.0}, y{0.0}, z{0.0};

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }

    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y,
            a.z * b.x - a.x * b.z,
            a.x * b.y - a.y * b.x};
}

inline double norm_squared(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm_squared(v)); }

inline Vec3 normalized(const Vec3& v, double eps = 1e-14) {
    const double n = norm(v);
    if (n < eps) throw std::invalid_argument("normalized(): zero-length vector");
    return v / n;
}

/// Unit direction on S^2. Construction rejects inputs whose norm deviates
/// from 1 by more than 1e-9, then renormalizes, so the stored coordinates
/// satisfy |v| = 1 to machine precision.
class UnitVector3 {
public:
    UnitVector3() : v_{1.0, 0.0, 0.0} {}

    explicit UnitVector3(const Vec3& v) : v_(checked(v)) {}
    UnitVector3(double x, double y, double z) : UnitVector3(Vec3{x, y, z}) {}

    /// Normalizing factory: accepts any nonzero vector.
    static UnitVector3 of(const Vec3& v) {
        UnitVector3 u;
        u.v_ = normalized(v);
        return u;
    }

    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }
    const Vec3& vec() const { return v_; }
    operator const Vec3&() const { return v_; }

    UnitVector3 operator-() const {
        UnitVector3 u;
        u.v_ = -v_;
        return u;
    }

private:
    static Vec3 checked(const Vec3& v) {
        const double n = norm(v);
        if (std::abs(n - 1.0) > 1e-9)
            throw std::invalid_argument("UnitVector3: vector is not unit length");
        return v / n;
    }

    Vec3 v_;
};

inline double dot(const UnitVector3& a, const UnitVector3& b) { return dot(a.vec(), b.vec()); }

/// Angle between two unit vectors, robust near 0 and pi.
inline double angle_between(const UnitVector3& a, const UnitVector3& b) {
    return 2.0 * std::asin(0.5 * norm(a.vec() - b.vec()));
}

}  // namespace projcong
