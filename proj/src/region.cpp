// SPDX-License-Identifier: Apache-2.0
#include "htm/region.hpp"

#include "htm/errors.hpp"

namespace htm {

Halfspace cap_halfspace(double lon_deg, double lat_deg, double radius_deg) {
    return {from_lonlat_deg(lon_deg, lat_deg), std::cos(deg2rad(radius_deg))};
}

Convex polygon_convex(const std::vector<Vector3>& vertices) {
    if (vertices.size() < 3) throw TooFewPoints("polygon needs at least 3 vertices");
    std::vector<Halfspace> hs;
    hs.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Vector3& a = vertices[i];
        const Vector3& b = vertices[(i + 1) % vertices.size()];
        const Vector3 n = a.cross(b);
        if (n.norm() < kEpsGeom)
            throw InvalidVector("degenerate polygon edge (coincident or antipodal vertices)");
        hs.push_back({n.normalized(), 0.0});
    }
    return Convex(std::move(hs));
}

}  // namespace htm
