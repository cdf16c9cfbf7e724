// SPDX-License-Identifier: Apache-2.0
#include "htm/measure.hpp"

#include <algorithm>
#include <cmath>

#include "htm/errors.hpp"

namespace htm {

namespace {

// Counterclockwise span from r1 to r2 in the plane of h, in (0, 2*pi];
// coincident endpoints mean the full circle.
double ccw_span(const Halfspace& h, const Vector3& r1, const Vector3& r2) {
    if ((r2 - r1).norm() <= kEpsGeom) return 2.0 * kPi;
    double s = lateral_angle(h, r2) - lateral_angle(h, r1);
    while (s <= 0.0) s += 2.0 * kPi;
    return s;
}

void require_circle(const Halfspace& h) {
    if (std::fabs(h.offset) >= 1.0 - 1e-12)
        throw DegenerateCircle("circle colatitude too close to 0 or pi");
}

// Inner angle at a between the tangents toward b and c.
double vertex_angle(const Vector3& a, const Vector3& b, const Vector3& c) {
    const Vector3 tb = b - a * a.dot(b);
    const Vector3 tc = c - a * a.dot(c);
    if (tb.norm() < 1e-15 || tc.norm() < 1e-15) return 0.0;
    return angle_between(tb, tc);
}

// Girard excess signed by winding.
double girard_signed(const Vector3& o, const Vector3& p, const Vector3& q) {
    const double excess =
        vertex_angle(o, p, q) + vertex_angle(p, q, o) + vertex_angle(q, o, p) - kPi;
    const double orient = o.cross(p).dot(q);
    if (orient > 0.0) return excess;
    if (orient < 0.0) return -excess;
    return 0.0;
}

// Signed sliver between the arc chord and the arc itself, assuming the span
// already excludes the full-circle case.
double semilune_of_span(const Halfspace& h, const Vector3& r1, const Vector3& r2, double span) {
    const double cos_theta = h.offset;
    const double beta = 2.0 * std::asin(clamp1(0.5 * (r2 - r1).norm()));
    const double tan_theta = std::tan(std::acos(clamp1(cos_theta)));
    const double halfpi_minus_a = std::asin(clamp1(std::tan(0.5 * beta) / tan_theta));
    return 2.0 * halfpi_minus_a - span * cos_theta;
}

}  // namespace

double semilune_area(const Halfspace& small_circle, const Vector3& r1, const Vector3& r2) {
    require_circle(small_circle);
    const double span = ccw_span(small_circle, r1, r2);
    if ((r2 - r1).norm() <= kEpsGeom)
        return span * (1.0 - small_circle.offset);  // whole cap sliced off by the circle
    return semilune_of_span(small_circle, r1, r2, span);
}

double arc_length(const Halfspace& small_circle, const Vector3& r1, const Vector3& r2) {
    require_circle(small_circle);
    const double sin_theta = std::sqrt(1.0 - small_circle.offset * small_circle.offset);
    return ccw_span(small_circle, r1, r2) * sin_theta;
}

Halfspace patch_bounding_circle(const SimplifiedConvex& c, const Patch& p) {
    if (p.arcs.empty()) throw EmptyPatch("patch has no arcs");
    if (p.full_circle())
        return c.convex.halfspaces[static_cast<std::size_t>(p.arcs.front().halfspace)];

    // Vertex set: the patch roots, plus the midpoint of every protruding
    // (positive small-circle) arc.
    std::vector<Vector3> verts;
    for (const Arc& a : p.arcs)
        verts.push_back(c.roots[static_cast<std::size_t>(a.start_root)].position);
    std::vector<Vector3> ext = verts;
    for (const Arc& a : p.arcs) {
        const Halfspace& h = c.convex.halfspaces[static_cast<std::size_t>(a.halfspace)];
        if (h.offset <= 1e-14) continue;
        const Vector3& r1 = c.roots[static_cast<std::size_t>(a.start_root)].position;
        const Vector3& r2 = c.roots[static_cast<std::size_t>(a.end_root)].position;
        const double span = ccw_span(h, r1, r2);
        ext.push_back(circle_point(h, lateral_angle(h, r1) + 0.5 * span));
    }

    auto contains_all = [&](const Halfspace& cand) {
        for (const Vector3& v : ext)
            if (!cand.contains(v)) return false;
        return true;
    };

    // (i) smallest member circle: always a valid cover of the whole convex.
    Halfspace best = c.convex.halfspaces.front();
    for (const Halfspace& h : c.convex.halfspaces)
        if (h.offset > best.offset) best = h;

    // (ii) two-point diameters (antipodal pairs have no midpoint and are skipped)
    for (std::size_t i = 0; i < ext.size(); ++i) {
        for (std::size_t j = i + 1; j < ext.size(); ++j) {
            const Vector3 m = ext[i] + ext[j];
            if (m.norm() < kEpsGeom) continue;
            const Halfspace cand{m.normalized(), 0.0};
            const Halfspace full{cand.normal, cand.normal.dot(ext[i])};
            if (full.offset > best.offset && contains_all(full)) best = full;
        }
    }

    // (iii) three-point circumcircles, normals directed by winding order
    for (std::size_t i = 0; i < ext.size(); ++i) {
        for (std::size_t j = i + 1; j < ext.size(); ++j) {
            for (std::size_t k = j + 1; k < ext.size(); ++k) {
                const Vector3 n = (ext[j] - ext[i]).cross(ext[k] - ext[j]);
                if (n.norm() < 1e-12) continue;
                const Halfspace cand{n.normalized(), 0.0};
                const Halfspace full{cand.normal, cand.normal.dot(ext[i])};
                if (full.offset > best.offset && contains_all(full)) best = full;
            }
        }
    }
    return best;
}

namespace {

double rooted_patch_area(const SimplifiedConvex& c, const Patch& p) {
    const Vector3 origin = patch_bounding_circle(c, p).normal;
    double total = 0.0;
    for (const Arc& a : p.arcs) {
        const Halfspace& h = c.convex.halfspaces[static_cast<std::size_t>(a.halfspace)];
        const Vector3& r1 = c.roots[static_cast<std::size_t>(a.start_root)].position;
        const Vector3& r2 = c.roots[static_cast<std::size_t>(a.end_root)].position;
        const double span = ccw_span(h, r1, r2);
        // Split long arcs so fan triangles stay non-degenerate.
        const int nseg = std::max(1, static_cast<int>(std::ceil(span / (0.5 * kPi) - 1e-12)));
        const double phi1 = lateral_angle(h, r1);
        Vector3 prev = r1;
        for (int s = 1; s <= nseg; ++s) {
            const Vector3 next =
                s == nseg ? r2 : circle_point(h, phi1 + span * s / nseg);
            total += girard_signed(origin, prev, next);
            if (std::fabs(h.offset) > 1e-14)
                total += semilune_of_span(h, prev, next, span / nseg);
            prev = next;
        }
    }
    return total;
}

}  // namespace

AreaResult region_area(const SimplifiedRegion& r) {
    AreaResult out;
    std::vector<Halfspace> patch_circles;
    std::vector<std::size_t> patch_convex;
    for (std::size_t ci = 0; ci < r.convexes.size(); ++ci) {
        const SimplifiedConvex& c = r.convexes[ci];
        double sum = 0.0;
        for (const Patch& p : c.patches) {
            if (p.full_circle()) {
                const Halfspace& h =
                    c.convex.halfspaces[static_cast<std::size_t>(p.arcs.front().halfspace)];
                // Outer boundary of a cap, or inner boundary of a hole.
                sum += h.offset >= 0.0 ? 2.0 * kPi * (1.0 - h.offset)
                                       : -2.0 * kPi * (1.0 + h.offset);
            } else {
                sum += rooted_patch_area(c, p);
            }
            patch_circles.push_back(patch_bounding_circle(c, p));
            patch_convex.push_back(ci);
        }
        // A pure-negative convex is the sphere minus holes; its loops are all
        // inner boundaries and the Euler term supplies the base area.
        if (c.convex.sign() == ConvexSign::Negative && sum <= 1e-12) sum += 4.0 * kPi;
        out.steradians += sum;
    }
    for (std::size_t i = 0; i < patch_circles.size(); ++i) {
        for (std::size_t j = i + 1; j < patch_circles.size(); ++j) {
            if (patch_convex[i] == patch_convex[j]) continue;
            const double gamma =
                std::acos(clamp1(patch_circles[i].normal.dot(patch_circles[j].normal)));
            if (gamma < patch_circles[i].arcangle() + patch_circles[j].arcangle())
                out.overlap_warning = true;
        }
    }
    return out;
}

HullResult convex_hull(std::span<const Vector3> points) {
    std::vector<Vector3> pts;
    for (const Vector3& p : points) {
        bool dup = false;
        for (const Vector3& q : pts) dup = dup || (p - q).norm() <= kEpsGeom;
        if (!dup) pts.push_back(p);
    }
    if (pts.size() < 3) throw TooFewPoints("convex hull needs at least 3 distinct points");

    Vector3 centroid{0, 0, 0};
    for (const Vector3& p : pts) centroid = centroid + p;
    if (centroid.norm() < kEpsGeom)
        throw NotHemispheric("points do not fit in an open hemisphere");
    centroid = centroid.normalized();
    for (const Vector3& p : pts)
        if (p.dot(centroid) <= 1e-12)
            throw NotHemispheric("points do not fit strictly inside one hemisphere");

    // Gnomonic projection onto the tangent plane at the centroid direction.
    const Vector3 seed = std::fabs(centroid.z) < 0.9 ? Vector3{0, 0, 1} : Vector3{1, 0, 0};
    const Vector3 e1 = centroid.cross(seed).normalized();
    const Vector3 e2 = centroid.cross(e1);
    struct P2 {
        double x, y;
        std::size_t idx;
    };
    std::vector<P2> plane;
    plane.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Vector3 t = pts[i] * (1.0 / pts[i].dot(centroid));
        plane.push_back({t.dot(e1), t.dot(e2), i});
    }
    std::sort(plane.begin(), plane.end(), [](const P2& a, const P2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    auto turn = [](const P2& o, const P2& a, const P2& b) {
        return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    };
    // Andrew's monotone chain, strict turns (collinear points dropped).
    std::vector<P2> hull(2 * plane.size());
    std::size_t k = 0;
    for (const P2& p : plane) {
        while (k >= 2 && turn(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
        hull[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = plane.size(); i-- > 1;) {
        const P2& p = plane[i - 1];
        while (k >= lower && turn(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
        hull[k++] = p;
    }
    hull.resize(k - 1);  // closed loop, counterclockwise in (e1, e2)
    if (hull.size() < 3)
        throw TooFewPoints("hull degenerates to fewer than 3 extreme points");

    HullResult out;
    for (const P2& p : hull) out.vertices.push_back(pts[p.idx]);
    // (e1, e2, centroid) is right-handed, so the planar loop is already
    // counterclockwise seen from outside the sphere.
    std::vector<Halfspace> hs;
    for (std::size_t i = 0; i < out.vertices.size(); ++i) {
        const Vector3& a = out.vertices[i];
        const Vector3& b = out.vertices[(i + 1) % out.vertices.size()];
        hs.push_back({a.cross(b).normalized(), 0.0});
    }
    out.convex = Convex(std::move(hs));
    for (const Vector3& p : pts) {
        for (const Halfspace& h : out.convex.halfspaces) {
            if (h.normal.dot(p) < -kEpsGeom)
                throw Error("hull construction failed containment check");
        }
    }
    return out;
}

}  // namespace htm
