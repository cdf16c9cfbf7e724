// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "htm/region.hpp"
#include "htm/simplify.hpp"

namespace htm {

// Smallest cap containing the patch, chosen among (i) the smallest member
// circle, (ii) two-point diameter circles, (iii) three-point circumcircles,
// with midpoints of protruding (positive small-circle) arcs as extra vertices.
Halfspace patch_bounding_circle(const SimplifiedConvex& c, const Patch& p);

// Signed area between the small-circle arc r1->r2 (counterclockwise in the
// plane of the circle) and the great-circle chord of its endpoints.  Negative
// on the hole side.  r1 == r2 means the full circle and yields the cap area.
double semilune_area(const Halfspace& small_circle, const Vector3& r1, const Vector3& r2);

// Proper length of the small-circle arc r1->r2 (phi * sin theta).
double arc_length(const Halfspace& small_circle, const Vector3& r1, const Vector3& r2);

struct AreaResult {
    double steradians = 0.0;
    // Bounding circles of patches from different convexes overlap; the sum
    // over patches may double count.
    bool overlap_warning = false;
};

// Girard fan from each patch's bounding-circle center plus signed semilunes.
AreaResult region_area(const SimplifiedRegion& r);

struct HullResult {
    std::vector<Vector3> vertices;  // counterclockwise
    Convex convex;                  // zero-offset halfspaces
};

// Gnomonic projection onto the tangent plane of the aggregate direction, then
// a planar monotone-chain hull lifted back to great circles.
HullResult convex_hull(std::span<const Vector3> points);

}  // namespace htm
