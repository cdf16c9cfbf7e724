// SPDX-License-Identifier: Apache-2.0
#pragma once

// Batch geometry kernels over structure-of-arrays point sets.  A scalar
// reference backend always exists; wider backends are selected at runtime and
// must produce bit-identical results (the library is built with contraction
// off and the vector code uses the same operation order as the scalar code).

#include <cstdint>
#include <span>
#include <string>

#include "htm/region.hpp"

namespace htm::kernels {

enum class Backend { Auto, Scalar, Avx2 };

// Resolves Auto to the best backend the CPU supports.
Backend active_backend();
std::string backend_name(Backend b);

// Overrides the dispatch (throws htm::Error if the backend is unsupported
// on this machine).  Pass Auto to restore detection.
void set_backend(Backend b);

struct Points {
    std::span<const double> x, y, z;
    std::size_t size() const { return x.size(); }
};

// out[i] = 1 if n . p_i > d - eps.
void halfspace_mask(const Vector3& n, double d, double eps, const Points& pts,
                    std::span<std::uint8_t> out);

// out[i] = 1 if p_i is inside every halfspace of c (0 for an empty convex).
void convex_mask(const Convex& c, double eps, const Points& pts, std::span<std::uint8_t> out);

// out[i] = 1 if p_i is inside any convex of r.
void region_mask(const Region& r, double eps, const Points& pts, std::span<std::uint8_t> out);

// out[i] = HtmId value of p_i at `depth` (inputs must be unit vectors).
void point_ids(const Points& pts, int depth, std::span<std::uint64_t> out);

}  // namespace htm::kernels
