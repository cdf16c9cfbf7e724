// SPDX-License-Identifier: Apache-2.0
#include "htm/kernels/kernels.hpp"

#include <atomic>

#include "htm/errors.hpp"
#include "htm/htmid.hpp"
#include "kernels_impl.hpp"

namespace htm::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(HTM_KERNELS_HAVE_AVX2)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

std::atomic<Backend> g_backend{Backend::Auto};

const Ops& ops_for(Backend b) {
#if defined(HTM_KERNELS_HAVE_AVX2)
    if (b == Backend::Avx2) return avx2_ops();
#endif
    (void)b;
    return scalar_ops();
}

const Ops& current_ops() { return ops_for(active_backend()); }

}  // namespace

Backend active_backend() {
    const Backend b = g_backend.load(std::memory_order_relaxed);
    if (b != Backend::Auto) return b;
    return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::string backend_name(Backend b) {
    switch (b) {
        case Backend::Auto: return "auto";
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
    }
    return "?";
}

void set_backend(Backend b) {
    if (b == Backend::Avx2 && !cpu_has_avx2())
        throw Error("avx2 backend not supported on this CPU");
    g_backend.store(b, std::memory_order_relaxed);
}

void halfspace_mask(const Vector3& n, double d, double eps, const Points& pts,
                    std::span<std::uint8_t> out) {
    current_ops().halfspace_mask(n, d, eps, pts, out);
}

void convex_mask(const Convex& c, double eps, const Points& pts, std::span<std::uint8_t> out) {
    current_ops().convex_mask(c, eps, pts, out);
}

void region_mask(const Region& r, double eps, const Points& pts, std::span<std::uint8_t> out) {
    current_ops().region_mask(r, eps, pts, out);
}

void point_ids(const Points& pts, int depth, std::span<std::uint64_t> out) {
    if (depth < 1 || depth > kMaxDepth)
        throw DepthLimitExceeded("depth must be in [1,26]");
    current_ops().point_ids(pts, depth, out);
}

}  // namespace htm::kernels
