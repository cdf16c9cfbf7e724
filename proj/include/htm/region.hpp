// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <vector>

#include "htm/geometry.hpp"

namespace htm {

// A plane-bounded cap {normal, offset} on the unit sphere.  Negative offsets
// cover more than a hemisphere ("holes"); offsets outside [-1,1] keep their
// clamped meaning (d <= -1 whole sphere, d > 1 empty).
struct Halfspace {
    Vector3 normal;
    double offset = 0.0;

    int sign() const { return offset < 0.0 ? -1 : (offset > 0.0 ? 1 : 0); }
    double arcangle() const { return std::acos(clamp1(offset)); }

    bool contains(const Vector3& p, double eps = kEpsGeom) const {
        return normal.dot(p) > offset - eps;
    }

    Halfspace complement() const { return {-normal, -offset}; }
};

enum class ConvexSign { Negative, Zero, Positive, Mixed };

struct Convex {
    // Kept sorted ascending by arcangle (largest offset first).
    std::vector<Halfspace> halfspaces;

    Convex() = default;
    explicit Convex(std::vector<Halfspace> hs) : halfspaces(std::move(hs)) { sort_by_arcangle(); }

    ConvexSign sign() const {
        bool pos = false, neg = false;
        for (const Halfspace& h : halfspaces) {
            if (h.sign() > 0) pos = true;
            if (h.sign() < 0) neg = true;
        }
        if (pos && neg) return ConvexSign::Mixed;
        if (neg) return ConvexSign::Negative;
        if (pos) return ConvexSign::Positive;
        return ConvexSign::Zero;
    }

    bool contains(const Vector3& p, double eps = kEpsGeom) const {
        if (halfspaces.empty()) return false;
        for (const Halfspace& h : halfspaces)
            if (!h.contains(p, eps)) return false;
        return true;
    }

    void sort_by_arcangle() {
        std::stable_sort(halfspaces.begin(), halfspaces.end(),
                         [](const Halfspace& a, const Halfspace& b) { return a.offset > b.offset; });
    }
};

// Union of convexes; the empty list is the empty region.
struct Region {
    std::vector<Convex> convexes;

    bool contains(const Vector3& p, double eps = kEpsGeom) const {
        for (const Convex& c : convexes)
            if (c.contains(p, eps)) return true;
        return false;
    }
};

// One halfspace covering everything within `radius_deg` of (lon, lat).
Halfspace cap_halfspace(double lon_deg, double lat_deg, double radius_deg);

// Spherical polygon with counterclockwise vertices; each edge (i, i+1)
// becomes a zero-offset halfspace with normal vi x vj.
Convex polygon_convex(const std::vector<Vector3>& vertices);

}  // namespace htm
