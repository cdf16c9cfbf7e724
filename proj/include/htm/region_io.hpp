// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>

#include "htm/region.hpp"
#include "htm/simplify.hpp"

namespace htm {

// Region text format: one token sequence per line, '#' starts a comment.
//   REGION
//   CONVEX
//   HALFSPACE x y z d
//   CIRCLE lon_deg lat_deg radius_deg
//   POLY lon1 lat1 lon2 lat2 ...
Region read_region(std::istream& in);
Region read_region_file(const std::string& path);
Region parse_region(const std::string& text);

void write_region(std::ostream& out, const Region& r);
std::string region_to_string(const Region& r);

// Boundary output: "PATCH k" lines followed by one
// "ARC halfspaceIndex x1 y1 z1 x2 y2 z2" line per arc.
void write_patches(std::ostream& out, const SimplifiedRegion& r);

}  // namespace htm
