// SPDX-License-Identifier: Apache-2.0
#include "htm/mesh.hpp"

#include <cmath>

#include "htm/detail/descend.hpp"
#include "htm/errors.hpp"

namespace htm {

const std::array<Trixel, 8>& base_faces() {
    static const std::array<Trixel, 8> faces = [] {
        std::array<Trixel, 8> out = {
            Trixel{HtmId(8), {}, {}, {}},  Trixel{HtmId(9), {}, {}, {}},
            Trixel{HtmId(10), {}, {}, {}}, Trixel{HtmId(11), {}, {}, {}},
            Trixel{HtmId(12), {}, {}, {}}, Trixel{HtmId(13), {}, {}, {}},
            Trixel{HtmId(14), {}, {}, {}}, Trixel{HtmId(15), {}, {}, {}},
        };
        for (int i = 0; i < 8; ++i) {
            const detail::FaceDef& f = detail::face_defs()[static_cast<std::size_t>(i)];
            out[static_cast<std::size_t>(i)].v0 = f.v0;
            out[static_cast<std::size_t>(i)].v1 = f.v1;
            out[static_cast<std::size_t>(i)].v2 = f.v2;
        }
        return out;
    }();
    return faces;
}

std::array<Trixel, 4> subdivide(const Trixel& t) {
    if (t.id.depth() >= kMaxDepth)
        throw DepthLimitExceeded("cannot subdivide below depth 26");
    const Vector3 w0 = (t.v1 + t.v2).normalized();
    const Vector3 w1 = (t.v0 + t.v2).normalized();
    const Vector3 w2 = (t.v0 + t.v1).normalized();
    return {
        Trixel{t.id.child(0), t.v0, w2, w1},
        Trixel{t.id.child(1), t.v1, w0, w2},
        Trixel{t.id.child(2), t.v2, w1, w0},
        Trixel{t.id.child(3), w0, w1, w2},
    };
}

HtmId point_to_id(const Vector3& p, int depth) {
    if (!p.is_unit()) throw InvalidVector("point_to_id requires a unit vector");
    if (depth < 1 || depth > kMaxDepth)
        throw DepthLimitExceeded("depth must be in [1,26]");
    return HtmId(detail::descend_point(p, depth));
}

Trixel id_to_trixel(HtmId id) {
    const detail::FaceDef& f = detail::face_defs()[static_cast<std::size_t>(id.base_face())];
    Trixel t{HtmId(f.id), f.v0, f.v1, f.v2};
    for (int level = 2; level <= id.depth(); ++level) {
        t = subdivide(t)[static_cast<std::size_t>(id.child_at(level))];
    }
    return t;
}

Vector3 trixel_centroid(const Trixel& t) { return (t.v0 + t.v1 + t.v2).normalized(); }

namespace {

// Inner angle at vertex a, between the tangents toward b and c.
double inner_angle(const Vector3& a, const Vector3& b, const Vector3& c) {
    const Vector3 tb = b - a * a.dot(b);
    const Vector3 tc = c - a * a.dot(c);
    return angle_between(tb, tc);
}

}  // namespace

double trixel_area(const Trixel& t) {
    return inner_angle(t.v0, t.v1, t.v2) + inner_angle(t.v1, t.v2, t.v0) +
           inner_angle(t.v2, t.v0, t.v1) - kPi;
}

TrixelBound trixel_bounding_circle(const Trixel& t) {
    const Vector3 n = ((t.v1 - t.v0).cross(t.v2 - t.v1)).normalized();
    return {n, n.dot(t.v0)};
}

namespace {

void visit(const Trixel& t, int remaining, const std::function<void(const Trixel&)>& fn) {
    if (remaining == 0) {
        fn(t);
        return;
    }
    for (const Trixel& c : subdivide(t)) visit(c, remaining - 1, fn);
}

}  // namespace

void for_each_trixel(int depth, const std::function<void(const Trixel&)>& fn) {
    if (depth < 1 || depth > kMaxDepth)
        throw DepthLimitExceeded("depth must be in [1,26]");
    for (const Trixel& f : base_faces()) visit(f, depth - 1, fn);
}

MeshStats mesh_stats(int depth) {
    if (depth < 1 || depth > 10)
        throw DepthLimitExceeded("mesh_stats enumerates fully; depth must be in [1,10]");
    MeshStats s;
    s.depth = depth;
    double area_sum = 0, area_sq = 0, arc_sum = 0, arc_sq = 0;
    s.area_min = s.arc_min = s.min_inner_angle = 1e30;
    s.area_max = s.arc_max = s.max_inner_angle = 0.0;
    for_each_trixel(depth, [&](const Trixel& t) {
        ++s.count;
        const double area = trixel_area(t);
        area_sum += area;
        area_sq += area * area;
        s.area_min = std::fmin(s.area_min, area);
        s.area_max = std::fmax(s.area_max, area);
        const double arcs[3] = {angle_between(t.v0, t.v1), angle_between(t.v1, t.v2),
                                angle_between(t.v2, t.v0)};
        for (double a : arcs) {
            arc_sum += a;
            arc_sq += a * a;
            s.arc_min = std::fmin(s.arc_min, a);
            s.arc_max = std::fmax(s.arc_max, a);
        }
        const double angles[3] = {inner_angle(t.v0, t.v1, t.v2), inner_angle(t.v1, t.v2, t.v0),
                                  inner_angle(t.v2, t.v0, t.v1)};
        for (double a : angles) {
            s.min_inner_angle = std::fmin(s.min_inner_angle, a);
            s.max_inner_angle = std::fmax(s.max_inner_angle, a);
        }
    });
    const double n = static_cast<double>(s.count);
    s.area_mean = area_sum / n;
    s.area_rel_variance = std::sqrt(std::fmax(0.0, area_sq / n - s.area_mean * s.area_mean)) / s.area_mean;
    const double narc = 3.0 * n;
    s.arc_mean = arc_sum / narc;
    s.arc_rel_variance = std::sqrt(std::fmax(0.0, arc_sq / narc - s.arc_mean * s.arc_mean)) / s.arc_mean;
    return s;
}

}  // namespace htm
