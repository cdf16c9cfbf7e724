// SPDX-License-Identifier: Apache-2.0
#pragma once

// Shared scalar descent core.  Both mesh::point_to_id and the batch kernels
// route through these helpers so every backend resolves ties identically.

#include <array>
#include <cstdint>

#include "htm/geometry.hpp"

namespace htm::detail {

inline bool edge_side(const Vector3& a, const Vector3& b, const Vector3& p, double eps) {
    return a.cross(b).dot(p) >= -eps;
}

inline bool tri_contains(const Vector3& a, const Vector3& b, const Vector3& c, const Vector3& p,
                         double eps) {
    return edge_side(a, b, p, eps) && edge_side(b, c, p, eps) && edge_side(c, a, p, eps);
}

struct FaceDef {
    std::uint64_t id;
    Vector3 v0, v1, v2;
};

// Eq-order tie breaking: S0..S3 first, then N0..N3.
inline const std::array<FaceDef, 8>& face_defs() {
    static const std::array<FaceDef, 8> faces = {{
        {8, {1, 0, 0}, {0, 0, -1}, {0, 1, 0}},    // S0
        {9, {0, 1, 0}, {0, 0, -1}, {-1, 0, 0}},   // S1
        {10, {-1, 0, 0}, {0, 0, -1}, {0, -1, 0}}, // S2
        {11, {0, -1, 0}, {0, 0, -1}, {1, 0, 0}},  // S3
        {12, {1, 0, 0}, {0, 0, 1}, {0, -1, 0}},   // N0
        {13, {0, -1, 0}, {0, 0, 1}, {-1, 0, 0}},  // N1
        {14, {-1, 0, 0}, {0, 0, 1}, {0, 1, 0}},   // N2
        {15, {0, 1, 0}, {0, 0, 1}, {1, 0, 0}},    // N3
    }};
    return faces;
}

struct DescendState {
    std::uint64_t id;
    Vector3 v0, v1, v2;
};

inline DescendState base_face_for(const Vector3& p, double eps = kEpsGeom) {
    for (const FaceDef& f : face_defs()) {
        if (tri_contains(f.v0, f.v1, f.v2, p, eps)) return {f.id, f.v0, f.v1, f.v2};
    }
    // Unreachable for unit p: the closed faces tile the sphere and eps only
    // widens them.  Fall back to N3 for safety.
    const FaceDef& f = face_defs()[7];
    return {f.id, f.v0, f.v1, f.v2};
}

inline void midpoints(const DescendState& s, Vector3& w0, Vector3& w1, Vector3& w2) {
    w0 = (s.v1 + s.v2).normalized();
    w1 = (s.v0 + s.v2).normalized();
    w2 = (s.v0 + s.v1).normalized();
}

// One level of descent, first-hit child in order 0..3.
inline void descend_one_level(DescendState& s, const Vector3& p, double eps = kEpsGeom) {
    Vector3 w0, w1, w2;
    midpoints(s, w0, w1, w2);
    if (tri_contains(s.v0, w2, w1, p, eps)) {
        s = {s.id << 2 | 0, s.v0, w2, w1};
    } else if (tri_contains(s.v1, w0, w2, p, eps)) {
        s = {s.id << 2 | 1, s.v1, w0, w2};
    } else if (tri_contains(s.v2, w1, w0, p, eps)) {
        s = {s.id << 2 | 2, s.v2, w1, w0};
    } else {
        s = {s.id << 2 | 3, w0, w1, w2};
    }
}

inline std::uint64_t descend_point(const Vector3& p, int depth, double eps = kEpsGeom) {
    DescendState s = base_face_for(p, eps);
    for (int d = 1; d < depth; ++d) descend_one_level(s, p, eps);
    return s.id;
}

}  // namespace htm::detail
