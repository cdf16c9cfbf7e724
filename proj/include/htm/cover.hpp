// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "htm/mesh.hpp"
#include "htm/region.hpp"
#include "htm/simplify.hpp"

namespace htm {

enum class Classification { Inside, Partial, Outside };

// Decision tree for one trixel against one cap: corner tests, bounding-circle
// rejection, edge intersections, center-in-triangle.
Classification classify_halfspace(const Trixel& t, const Halfspace& h);

// Number of crossings of the cap boundary with the great-circle edge a->b,
// strictly inside the open segment.
int edge_hits(const Halfspace& h, const Vector3& a, const Vector3& b);

// Sign-dispatched trees for positive/zero, negative, and mixed convexes.
Classification classify_convex(const Trixel& t, const Convex& c);

// Inside if inside any convex; Outside if outside all; else Partial.
Classification classify_region(const Trixel& t, const Region& r);

struct CoverEntry {
    HtmId id;
    bool full;
};

struct CoverParams {
    int min_depth = 0;  // 0 = derive from the largest patch bounding circle
    int max_depth = 20;
    int range_depth = 21;
};

struct Cover {
    std::vector<CoverEntry> entries;
    int min_depth = 0;
    int max_depth = 0;
    int range_depth = 0;
};

Cover cover(const SimplifiedRegion& r, CoverParams params = {});

struct RangeSet {
    struct Interval {
        std::uint64_t lo;
        std::uint64_t hi;
        bool full;  // provenance: false once Partial or merged across kinds
    };
    int depth = 0;
    std::vector<Interval> intervals;
};

// Expands entries to range_depth, merges consecutive intervals losslessly,
// then merges smallest-gap pairs (overshooting) until at most max_ranges
// remain.
RangeSet to_ranges(const Cover& c, std::size_t max_ranges);

}  // namespace htm
