// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "htm/cover.hpp"
#include "htm/errors.hpp"

namespace htm {

namespace {

// Corner test with the boundary band counted inside (overshoot-safe).
inline bool corner_inside(const Halfspace& h, const Vector3& v) {
    return h.normal.dot(v) > h.offset - kEpsGeom;
}

inline int corners_inside(const Trixel& t, const Halfspace& h) {
    return (corner_inside(h, t.v0) ? 1 : 0) + (corner_inside(h, t.v1) ? 1 : 0) +
           (corner_inside(h, t.v2) ? 1 : 0);
}

// Center-in-triangle test: false as soon as v_c is on the outer side of an
// ordered edge.
inline bool center_in_triangle(const Trixel& t, const Vector3& vc) {
    if (t.v0.cross(t.v1).dot(vc) < 0.0) return false;
    if (t.v1.cross(t.v2).dot(vc) < 0.0) return false;
    if (t.v2.cross(t.v0).dot(vc) < 0.0) return false;
    return true;
}

inline bool any_edge_hit(const Trixel& t, const Halfspace& h) {
    return edge_hits(h, t.v0, t.v1) > 0 || edge_hits(h, t.v1, t.v2) > 0 ||
           edge_hits(h, t.v2, t.v0) > 0;
}

// Bounding-circle separation: true when the trixel's circumcircle cannot
// touch the cap.
inline bool bounding_circle_disjoint(const Trixel& t, const Halfspace& h) {
    const TrixelBound b = trixel_bounding_circle(t);
    const double theta = std::acos(clamp1(h.normal.dot(b.center)));
    return theta >= std::acos(clamp1(h.offset)) + std::acos(clamp1(b.offset));
}

}  // namespace

int edge_hits(const Halfspace& h, const Vector3& a, const Vector3& b) {
    const double cos_ab = a.dot(b);
    if (cos_ab <= -1.0 + kEpsGeom)
        throw InvalidEdge("edge endpoints are antipodal");
    // u = tan(theta/2) through the half-angle identity
    const double u2 = (1.0 - cos_ab) / (1.0 + cos_ab);
    const double g1 = h.normal.dot(a);
    const double g2 = h.normal.dot(b);
    const double d = h.offset;
    const double qa = -u2 * (g1 + d);
    const double qb = g1 * (u2 - 1.0) + g2 * (u2 + 1.0);
    const double qc = g1 - d;

    auto in_open_unit = [](double s) { return s > 0.0 && s < 1.0; };
    if (qa == 0.0) {
        if (qb == 0.0) return 0;  // edge lies on the boundary plane or misses entirely
        return in_open_unit(-qc / qb) ? 1 : 0;
    }
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc <= 0.0) return 0;  // tangency counts as no crossing
    const double sq = std::sqrt(disc);
    // Citardauq-stable pair of roots.
    const double q = -0.5 * (qb + (qb >= 0.0 ? sq : -sq));
    const double s1 = q / qa;
    const double s2 = qc / q;
    return (in_open_unit(s1) ? 1 : 0) + (in_open_unit(s2) ? 1 : 0);
}

Classification classify_halfspace(const Trixel& t, const Halfspace& h) {
    const int nin = corners_inside(t, h);
    if (nin == 3) return Classification::Inside;  // pure corner test; see convex trees
    if (nin > 0) return Classification::Partial;
    if (bounding_circle_disjoint(t, h)) return Classification::Outside;
    if (any_edge_hit(t, h)) return Classification::Partial;
    return center_in_triangle(t, h.normal) ? Classification::Partial : Classification::Outside;
}

namespace {

Classification classify_positive(const Trixel& t, const Convex& c) {
    bool all_inside = true;
    for (const Halfspace& h : c.halfspaces) {
        switch (classify_halfspace(t, h)) {
            case Classification::Outside: return Classification::Outside;
            case Classification::Partial: all_inside = false; break;
            case Classification::Inside: break;
        }
    }
    return all_inside ? Classification::Inside : Classification::Partial;
}

int corners_inside_convex(const Trixel& t, const Convex& c) {
    int n = 0;
    for (const Vector3* v : {&t.v0, &t.v1, &t.v2}) {
        bool in = true;
        for (const Halfspace& h : c.halfspaces) in = in && corner_inside(h, *v);
        n += in ? 1 : 0;
    }
    return n;
}

bool any_halfspace_crosses_edges(const Trixel& t, const Convex& c) {
    for (const Halfspace& h : c.halfspaces)
        if (std::fabs(h.offset) < 1.0 && any_edge_hit(t, h)) return true;
    return false;
}

// A hole (anti-cap of a negative halfspace) strictly interior to the trixel
// leaves corners and edges untouched; test the hole centers.
bool hole_center_in_trixel(const Trixel& t, const Convex& c) {
    for (const Halfspace& h : c.halfspaces) {
        if (h.sign() >= 0 || h.offset <= -1.0) continue;
        if (center_in_triangle(t, -h.normal)) return true;
    }
    return false;
}

Classification classify_negative(const Trixel& t, const Convex& c) {
    const int nin = corners_inside_convex(t, c);
    if (nin == 3) {
        if (hole_center_in_trixel(t, c)) return Classification::Partial;
        if (any_halfspace_crosses_edges(t, c)) return Classification::Partial;
        return Classification::Inside;
    }
    if (nin > 0) return Classification::Partial;
    if (!any_halfspace_crosses_edges(t, c)) return Classification::Outside;
    return Classification::Partial;  // complicated patterns: assume partial
}

Classification classify_mixed(const Trixel& t, const Convex& c) {
    for (const Halfspace& h : c.halfspaces) {
        if (h.sign() > 0 && classify_halfspace(t, h) == Classification::Outside)
            return Classification::Outside;
    }
    const int nin = corners_inside_convex(t, c);
    if (nin == 3 && !any_halfspace_crosses_edges(t, c) && !hole_center_in_trixel(t, c))
        return Classification::Inside;
    return Classification::Partial;
}

}  // namespace

Classification classify_convex(const Trixel& t, const Convex& c) {
    if (c.halfspaces.empty()) return Classification::Outside;  // NULL convex
    switch (c.sign()) {
        case ConvexSign::Positive:
        case ConvexSign::Zero: return classify_positive(t, c);
        case ConvexSign::Negative: return classify_negative(t, c);
        case ConvexSign::Mixed: return classify_mixed(t, c);
    }
    return Classification::Partial;
}

Classification classify_region(const Trixel& t, const Region& r) {
    bool all_outside = true;
    for (const Convex& c : r.convexes) {
        switch (classify_convex(t, c)) {
            case Classification::Inside: return Classification::Inside;
            case Classification::Partial: all_outside = false; break;
            case Classification::Outside: break;
        }
    }
    return all_outside ? Classification::Outside : Classification::Partial;
}

}  // namespace htm
