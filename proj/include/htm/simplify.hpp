// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "htm/region.hpp"

namespace htm {

// An intersection point of two halfspace planes with the sphere.  The pair is
// ordered: the root lies on the positive w-branch of (parent_a, parent_b);
// swapping the parents names the antipodal branch.
struct Root {
    Vector3 position;
    int parent_a = -1;
    int parent_b = -1;
    // 1 good / 0 masked by a good circle / -1 not from a good pair /
    // -2 masked only by a circle outside the good set (transient).
    int flag = 1;
    // Westward anchor of a full-circle arc (parent_a == parent_b).
    bool synthetic = false;
};

struct Arc {
    int halfspace = -1;
    int start_root = -1;
    int end_root = -1;
    bool full_circle() const { return start_root == end_root; }
};

// One closed boundary loop: either a chain of rooted arcs or a single full
// circle.
struct Patch {
    std::vector<Arc> arcs;
    bool full_circle() const { return arcs.size() == 1 && arcs.front().full_circle(); }
};

// Rules (i) duplicates, (ii) complement pair => NULL, (iii) whole-sphere
// halfspaces dropped unless sole member, (iv) any d > 1 => NULL.
// Result is sorted by arcangle; nullopt means the convex is NULL.
std::optional<Convex> trivial_simplify(const Convex& c);

// Eq pairwise tests on arcangles: mutually exclusive pair => NULL; a cap
// containing another lets the larger one be dropped.  Expects a trivially
// simplified convex.
std::optional<Convex> pairwise_simplify(const Convex& c);

// Roots of every halfspace pair, both branches, flag 1 when the root
// satisfies all the other halfspaces.
std::vector<Root> compute_roots(const Convex& c);

// Assigns flags 0/-1/-2 to the bad roots, then grows the good-circle set with
// masking circles until no -2 roots remain.  Returns the set (sorted indices).
std::vector<int> select_masking_circles(const Convex& c, std::vector<Root>& roots);

// Point exactly west of the cap center, on the circle.
Vector3 westward_point(const Halfspace& h);

// Lateral angle of r in the plane of h (w westward, u = w x n northward).
double lateral_angle(const Halfspace& h, const Vector3& r);

// r(phi) on the circle of h.
Vector3 circle_point(const Halfspace& h, double phi);

enum class Visibility { Inside, Outside };

// Tests the westward point of halfspaces[self] against the rest of the convex.
// Only meaningful when the circle intersects no other member circle.
Visibility visibility(const Convex& c, int self);

// Arcs of the rooted halfspaces: good roots sorted counterclockwise per
// circle, arcs from each beginning root to the next end.
std::vector<Arc> assemble_arcs(const Convex& c, const std::vector<Root>& roots);

// Chains arcs end-to-start into closed patches.  Full-circle arcs of
// non-negative halfspaces come first, rooted chains next (starting from the
// smallest root id), hole circles last.
std::vector<Patch> assemble_patches(const Convex& c, const std::vector<Arc>& arcs);

struct SimplifiedConvex {
    Convex convex;
    std::vector<Root> roots;  // good + synthetic, parents remapped to `convex`
    std::vector<Arc> arcs;
    std::vector<Patch> patches;
};

struct SimplifiedRegion {
    std::vector<SimplifiedConvex> convexes;

    Region region() const {
        Region r;
        r.convexes.reserve(convexes.size());
        for (const SimplifiedConvex& c : convexes) r.convexes.push_back(c.convex);
        return r;
    }

    bool contains(const Vector3& p, double eps = kEpsGeom) const {
        for (const SimplifiedConvex& c : convexes)
            if (c.convex.contains(p, eps)) return true;
        return false;
    }

    bool empty() const { return convexes.empty(); }
};

// Full pipeline per convex: trivial and pairwise rejection, roots, masking,
// hole visibility, arcs and patches; redundant halfspaces dropped, NULL
// convexes removed from the region.
SimplifiedRegion simplify(const Region& r);

}  // namespace htm
