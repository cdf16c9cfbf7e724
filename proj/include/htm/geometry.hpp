// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace htm {

inline constexpr double kPi = 3.14159265358979323846;

// Tolerance for plane/containment comparisons.
inline constexpr double kEpsGeom = 1e-9;
// Tolerance for the parallel-plane test |1 - gamma^2|.
inline constexpr double kEpsParallel = 1e-12;

struct Vector3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vector3() = default;
    constexpr Vector3(double xx, double yy, double zz) : x(xx), y(yy), z(zz) {}

    constexpr double dot(const Vector3& o) const { return x * o.x + y * o.y + z * o.z; }

    constexpr Vector3 cross(const Vector3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }

    constexpr double norm2() const { return x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }

    Vector3 normalized() const {
        const double n = norm();
        return {x / n, y / n, z / n};
    }

    constexpr Vector3 operator+(const Vector3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vector3 operator-(const Vector3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vector3 operator-() const { return {-x, -y, -z}; }
    constexpr Vector3 operator*(double s) const { return {x * s, y * s, z * s}; }

    bool is_unit(double tol = 1e-10) const { return std::fabs(norm2() - 1.0) <= tol; }
};

inline constexpr Vector3 operator*(double s, const Vector3& v) { return v * s; }

// Angle between two vectors, stable for nearly parallel and nearly antiparallel inputs.
inline double angle_between(const Vector3& a, const Vector3& b) {
    return std::atan2(a.cross(b).norm(), a.dot(b));
}

inline double deg2rad(double d) { return d * (kPi / 180.0); }
inline double rad2deg(double r) { return r * (180.0 / kPi); }

// Unit vector for (longitude, latitude) in degrees: x = cos d cos a, etc.
inline Vector3 from_lonlat_deg(double lon_deg, double lat_deg) {
    const double a = deg2rad(lon_deg);
    const double d = deg2rad(lat_deg);
    return {std::cos(d) * std::cos(a), std::cos(d) * std::sin(a), std::sin(d)};
}

struct LonLat {
    double lon_deg;
    double lat_deg;
};

inline LonLat to_lonlat_deg(const Vector3& v) {
    double lon = rad2deg(std::atan2(v.y, v.x));
    if (lon < 0.0) lon += 360.0;
    const double lat = rad2deg(std::asin(std::fmax(-1.0, std::fmin(1.0, v.z))));
    return {lon, lat};
}

inline double clamp1(double v) { return v < -1.0 ? -1.0 : (v > 1.0 ? 1.0 : v); }

// Great-circle distance computed through the half-chord; asin is stable for
// small separations where acos loses digits.
inline double distance_rad(const Vector3& a, const Vector3& b) {
    const double half_chord = 0.5 * (a - b).norm();
    return 2.0 * std::asin(clamp1(half_chord));
}

}  // namespace htm
