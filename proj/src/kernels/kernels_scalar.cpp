// SPDX-License-Identifier: Apache-2.0
// Reference backend.  Plain loops over the shared per-point cores; the wide
// backends are validated bit-for-bit against these.
#include "htm/detail/descend.hpp"
#include "kernels_impl.hpp"

namespace htm::kernels {
namespace {

void halfspace_mask_scalar(const Vector3& n, double d, double eps, const Points& pts,
                           std::span<std::uint8_t> out) {
    const double lim = d - eps;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double dot = n.x * pts.x[i] + n.y * pts.y[i] + n.z * pts.z[i];
        out[i] = dot > lim ? 1 : 0;
    }
}

void convex_mask_scalar(const Convex& c, double eps, const Points& pts,
                        std::span<std::uint8_t> out) {
    if (c.halfspaces.empty()) {
        for (std::size_t i = 0; i < pts.size(); ++i) out[i] = 0;
        return;
    }
    for (std::size_t i = 0; i < pts.size(); ++i) out[i] = 1;
    for (const Halfspace& h : c.halfspaces) {
        const double lim = h.offset - eps;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const double dot =
                h.normal.x * pts.x[i] + h.normal.y * pts.y[i] + h.normal.z * pts.z[i];
            out[i] = static_cast<std::uint8_t>(out[i] & (dot > lim ? 1 : 0));
        }
    }
}

void region_mask_scalar(const Region& r, double eps, const Points& pts,
                        std::span<std::uint8_t> out) {
    for (std::size_t i = 0; i < pts.size(); ++i) out[i] = 0;
    std::vector<std::uint8_t> tmp(pts.size());
    for (const Convex& c : r.convexes) {
        convex_mask_scalar(c, eps, pts, tmp);
        for (std::size_t i = 0; i < pts.size(); ++i)
            out[i] = static_cast<std::uint8_t>(out[i] | tmp[i]);
    }
}

void point_ids_scalar(const Points& pts, int depth, std::span<std::uint64_t> out) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out[i] = detail::descend_point({pts.x[i], pts.y[i], pts.z[i]}, depth);
    }
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops = {halfspace_mask_scalar, convex_mask_scalar, region_mask_scalar,
                            point_ids_scalar};
    return ops;
}

}  // namespace htm::kernels
