// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "htm/geometry.hpp"
#include "htm/kernels/kernels.hpp"
#include "htm/mesh.hpp"
#include "htm/region.hpp"

namespace htmtest {

using htm::Vector3;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

inline Vector3 random_unit(std::mt19937_64& g) {
    std::normal_distribution<double> n;
    for (;;) {
        const Vector3 v{n(g), n(g), n(g)};
        const double len = v.norm();
        if (len > 1e-6) return {v.x / len, v.y / len, v.z / len};
    }
}

// Uniform point in the cap around `center` with cos(radius) = min_dot.
inline Vector3 random_in_cap(std::mt19937_64& g, const Vector3& center, double min_dot) {
    std::uniform_real_distribution<double> uz(min_dot, 1.0), uphi(0.0, 2.0 * htm::kPi);
    const double z = uz(g);
    const double phi = uphi(g);
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    const Vector3 seed = std::fabs(center.z) < 0.9 ? Vector3{0, 0, 1} : Vector3{1, 0, 0};
    const Vector3 e1 = center.cross(seed).normalized();
    const Vector3 e2 = center.cross(e1);
    return (center * z + e1 * (s * std::cos(phi)) + e2 * (s * std::sin(phi))).normalized();
}

struct SoA {
    std::vector<double> x, y, z;
    void push(const Vector3& v) {
        x.push_back(v.x);
        y.push_back(v.y);
        z.push_back(v.z);
    }
    htm::kernels::Points points() const { return {x, y, z}; }
    std::size_t size() const { return x.size(); }
};

inline SoA random_units(std::mt19937_64& g, std::size_t n) {
    SoA out;
    for (std::size_t i = 0; i < n; ++i) out.push(random_unit(g));
    return out;
}

// Monte Carlo area of a region (steradians) plus the binomial sigma.
struct McArea {
    double area;
    double sigma;
};

inline McArea mc_region_area(const htm::Region& r, std::size_t n, std::mt19937_64& g) {
    SoA pts = random_units(g, n);
    std::vector<std::uint8_t> mask(n);
    htm::kernels::region_mask(r, htm::kEpsGeom, pts.points(), mask);
    std::size_t in = 0;
    for (std::uint8_t m : mask) in += m;
    const double p = static_cast<double>(in) / static_cast<double>(n);
    return {4.0 * htm::kPi * p,
            4.0 * htm::kPi * std::sqrt(std::max(p * (1.0 - p), 1.0 / static_cast<double>(n)) /
                                       static_cast<double>(n))};
}

// Conservative angular distance from p to the region boundary: the best
// convex's worst halfspace slack (positive only when p is inside).
inline double interior_margin_rad(const htm::Region& r, const Vector3& p) {
    double best = -htm::kPi;
    for (const htm::Convex& c : r.convexes) {
        double worst = htm::kPi;
        for (const htm::Halfspace& h : c.halfspaces) {
            const double slack = h.arcangle() - htm::angle_between(h.normal, p);
            worst = std::min(worst, slack);
        }
        if (!c.halfspaces.empty()) best = std::max(best, worst);
    }
    return best;
}

// Uniform point inside a trixel by rejection from its circumscribed cap.
inline Vector3 random_in_trixel(std::mt19937_64& g, const htm::Trixel& t) {
    const htm::TrixelBound b = htm::trixel_bounding_circle(t);
    for (;;) {
        const Vector3 p = random_in_cap(g, b.center, b.offset);
        if (t.v0.cross(t.v1).dot(p) < 0.0) continue;
        if (t.v1.cross(t.v2).dot(p) < 0.0) continue;
        if (t.v2.cross(t.v0).dot(p) < 0.0) continue;
        return p;
    }
}

}  // namespace htmtest
