// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <functional>

#include "htm/geometry.hpp"
#include "htm/htmid.hpp"

namespace htm {

struct Trixel {
    HtmId id;
    Vector3 v0, v1, v2;  // counterclockwise from outside: (v0 x v1) . v2 > 0
};

// The eight octahedral faces S0..S3,N0..N3 (ids 8..15).
const std::array<Trixel, 8>& base_faces();

std::array<Trixel, 4> subdivide(const Trixel& t);

// Descends from the base face containing p (faces tried in order S0..S3,N0..N3,
// children in order 0..3; first closed-triangle hit wins).
HtmId point_to_id(const Vector3& p, int depth);

Trixel id_to_trixel(HtmId id);

Vector3 trixel_centroid(const Trixel& t);

// Girard spherical excess.
double trixel_area(const Trixel& t);

// Circumscribed cap of the trixel: plane through the three vertices.
// Returned as (center, offset) like a halfspace.
struct TrixelBound {
    Vector3 center;
    double offset;
};
TrixelBound trixel_bounding_circle(const Trixel& t);

// Visits all 8*4^(depth-1) trixels at `depth`.
void for_each_trixel(int depth, const std::function<void(const Trixel&)>& fn);

struct MeshStats {
    int depth = 0;
    std::uint64_t count = 0;
    double area_min = 0, area_max = 0, area_mean = 0, area_rel_variance = 0;
    double arc_min = 0, arc_max = 0, arc_mean = 0, arc_rel_variance = 0;
    double max_inner_angle = 0, min_inner_angle = 0;
};

// Full enumeration; areas by Girard excess, arcs as great-circle angles of the
// three sides of every trixel, relative variance = stddev/mean.
MeshStats mesh_stats(int depth);

}  // namespace htm
