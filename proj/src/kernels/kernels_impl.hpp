// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "htm/kernels/kernels.hpp"

namespace htm::kernels {

struct Ops {
    void (*halfspace_mask)(const Vector3&, double, double, const Points&,
                           std::span<std::uint8_t>);
    void (*convex_mask)(const Convex&, double, const Points&, std::span<std::uint8_t>);
    void (*region_mask)(const Region&, double, const Points&, std::span<std::uint8_t>);
    void (*point_ids)(const Points&, int, std::span<std::uint64_t>);
};

const Ops& scalar_ops();

#if defined(__x86_64__) || defined(_M_X64)
#define HTM_KERNELS_HAVE_AVX2 1
const Ops& avx2_ops();
#endif

}  // namespace htm::kernels
