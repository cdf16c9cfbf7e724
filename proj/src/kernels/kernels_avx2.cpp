// SPDX-License-Identifier: Apache-2.0
// AVX2 backend: four points per lane-set, same operation order as the scalar
// core (mul/add, no FMA) so results match the reference bit-for-bit.
#include "kernels_impl.hpp"

#if defined(HTM_KERNELS_HAVE_AVX2)

#include <immintrin.h>

#include "htm/detail/descend.hpp"

namespace htm::kernels {
namespace {

using vd = __m256d;

inline vd vset(double s) { return _mm256_set1_pd(s); }

// ((x*a + y*b) + z*c), matching Vector3::dot evaluation order.
inline vd dot3(vd ax, vd ay, vd az, vd bx, vd by, vd bz) {
    return _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(ax, bx), _mm256_mul_pd(ay, by)),
                         _mm256_mul_pd(az, bz));
}

struct V3x4 {
    vd x, y, z;
};

inline V3x4 vsplat(const Vector3& v) { return {vset(v.x), vset(v.y), vset(v.z)}; }

inline V3x4 vadd(const V3x4& a, const V3x4& b) {
    return {_mm256_add_pd(a.x, b.x), _mm256_add_pd(a.y, b.y), _mm256_add_pd(a.z, b.z)};
}

inline V3x4 vcross(const V3x4& a, const V3x4& b) {
    return {_mm256_sub_pd(_mm256_mul_pd(a.y, b.z), _mm256_mul_pd(a.z, b.y)),
            _mm256_sub_pd(_mm256_mul_pd(a.z, b.x), _mm256_mul_pd(a.x, b.z)),
            _mm256_sub_pd(_mm256_mul_pd(a.x, b.y), _mm256_mul_pd(a.y, b.x))};
}

inline vd vdot(const V3x4& a, const V3x4& b) { return dot3(a.x, a.y, a.z, b.x, b.y, b.z); }

inline V3x4 vnormalized(const V3x4& a) {
    const vd n = _mm256_sqrt_pd(vdot(a, a));
    return {_mm256_div_pd(a.x, n), _mm256_div_pd(a.y, n), _mm256_div_pd(a.z, n)};
}

inline V3x4 vblend(const V3x4& a, const V3x4& b, vd mask) {
    return {_mm256_blendv_pd(a.x, b.x, mask), _mm256_blendv_pd(a.y, b.y, mask),
            _mm256_blendv_pd(a.z, b.z, mask)};
}

// cross(a,b).p >= -eps per lane.
inline vd edge_side(const V3x4& a, const V3x4& b, const V3x4& p, vd neg_eps) {
    return _mm256_cmp_pd(vdot(vcross(a, b), p), neg_eps, _CMP_GE_OQ);
}

inline vd tri_contains(const V3x4& a, const V3x4& b, const V3x4& c, const V3x4& p, vd neg_eps) {
    return _mm256_and_pd(_mm256_and_pd(edge_side(a, b, p, neg_eps), edge_side(b, c, p, neg_eps)),
                         edge_side(c, a, p, neg_eps));
}

void halfspace_mask_avx2(const Vector3& n, double d, double eps, const Points& pts,
                         std::span<std::uint8_t> out) {
    const std::size_t size = pts.size();
    const std::size_t main = size - size % 4;
    const vd lim = vset(d - eps);
    const vd nx = vset(n.x), ny = vset(n.y), nz = vset(n.z);
    for (std::size_t i = 0; i < main; i += 4) {
        const vd dot = dot3(nx, ny, nz, _mm256_loadu_pd(&pts.x[i]), _mm256_loadu_pd(&pts.y[i]),
                            _mm256_loadu_pd(&pts.z[i]));
        const int m = _mm256_movemask_pd(_mm256_cmp_pd(dot, lim, _CMP_GT_OQ));
        out[i + 0] = static_cast<std::uint8_t>(m & 1);
        out[i + 1] = static_cast<std::uint8_t>((m >> 1) & 1);
        out[i + 2] = static_cast<std::uint8_t>((m >> 2) & 1);
        out[i + 3] = static_cast<std::uint8_t>((m >> 3) & 1);
    }
    if (main < size) {
        scalar_ops().halfspace_mask(
            n, d, eps, Points{pts.x.subspan(main), pts.y.subspan(main), pts.z.subspan(main)},
            out.subspan(main));
    }
}

void convex_mask_avx2(const Convex& c, double eps, const Points& pts,
                      std::span<std::uint8_t> out) {
    const std::size_t size = pts.size();
    if (c.halfspaces.empty()) {
        for (std::size_t i = 0; i < size; ++i) out[i] = 0;
        return;
    }
    for (std::size_t i = 0; i < size; ++i) out[i] = 1;
    std::vector<std::uint8_t> tmp(size);
    for (const Halfspace& h : c.halfspaces) {
        halfspace_mask_avx2(h.normal, h.offset, eps, pts, tmp);
        for (std::size_t i = 0; i < size; ++i)
            out[i] = static_cast<std::uint8_t>(out[i] & tmp[i]);
    }
}

void region_mask_avx2(const Region& r, double eps, const Points& pts,
                      std::span<std::uint8_t> out) {
    const std::size_t size = pts.size();
    for (std::size_t i = 0; i < size; ++i) out[i] = 0;
    std::vector<std::uint8_t> tmp(size);
    for (const Convex& c : r.convexes) {
        convex_mask_avx2(c, eps, pts, tmp);
        for (std::size_t i = 0; i < size; ++i)
            out[i] = static_cast<std::uint8_t>(out[i] | tmp[i]);
    }
}

// Lockstep descent of four points.  Children are tried in order 0..3 with a
// priority blend, mirroring the scalar first-hit rule exactly.
void point_ids4(const double* px, const double* py, const double* pz, int depth,
                std::uint64_t* out) {
    const vd neg_eps = vset(-kEpsGeom);
    const V3x4 p{_mm256_loadu_pd(px), _mm256_loadu_pd(py), _mm256_loadu_pd(pz)};

    V3x4 v0{}, v1{}, v2{};
    __m256i id = _mm256_setzero_si256();
    vd assigned = _mm256_setzero_pd();
    for (const detail::FaceDef& f : detail::face_defs()) {
        const V3x4 a = vsplat(f.v0), b = vsplat(f.v1), c = vsplat(f.v2);
        const vd hit = _mm256_andnot_pd(assigned, tri_contains(a, b, c, p, neg_eps));
        v0 = vblend(v0, a, hit);
        v1 = vblend(v1, b, hit);
        v2 = vblend(v2, c, hit);
        id = _mm256_blendv_epi8(id, _mm256_set1_epi64x(static_cast<long long>(f.id)),
                                _mm256_castpd_si256(hit));
        assigned = _mm256_or_pd(assigned, hit);
    }
    {
        // Unreachable fallback, kept identical to the scalar core (N3).
        const detail::FaceDef& f = detail::face_defs()[7];
        const vd rest = _mm256_andnot_pd(assigned, _mm256_castsi256_pd(_mm256_set1_epi64x(-1)));
        v0 = vblend(v0, vsplat(f.v0), rest);
        v1 = vblend(v1, vsplat(f.v1), rest);
        v2 = vblend(v2, vsplat(f.v2), rest);
        id = _mm256_blendv_epi8(id, _mm256_set1_epi64x(static_cast<long long>(f.id)),
                                _mm256_castpd_si256(rest));
    }

    for (int level = 1; level < depth; ++level) {
        const V3x4 w0 = vnormalized(vadd(v1, v2));
        const V3x4 w1 = vnormalized(vadd(v0, v2));
        const V3x4 w2 = vnormalized(vadd(v0, v1));
        const vd m0 = tri_contains(v0, w2, w1, p, neg_eps);
        const vd m1 = tri_contains(v1, w0, w2, p, neg_eps);
        const vd m2 = tri_contains(v2, w1, w0, p, neg_eps);

        __m256i sel = _mm256_set1_epi64x(3);
        sel = _mm256_blendv_epi8(sel, _mm256_set1_epi64x(2), _mm256_castpd_si256(m2));
        sel = _mm256_blendv_epi8(sel, _mm256_set1_epi64x(1), _mm256_castpd_si256(m1));
        sel = _mm256_blendv_epi8(sel, _mm256_setzero_si256(), _mm256_castpd_si256(m0));
        id = _mm256_or_si256(_mm256_slli_epi64(id, 2), sel);

        // Priority blend: start from child 3 and override with 2, 1, 0.
        V3x4 n0 = w0, n1 = w1, n2 = w2;
        n0 = vblend(n0, v2, m2);
        n1 = vblend(n1, w1, m2);
        n2 = vblend(n2, w0, m2);
        n0 = vblend(n0, v1, m1);
        n1 = vblend(n1, w0, m1);
        n2 = vblend(n2, w2, m1);
        n0 = vblend(n0, v0, m0);
        n1 = vblend(n1, w2, m0);
        n2 = vblend(n2, w1, m0);
        v0 = n0;
        v1 = n1;
        v2 = n2;
    }

    alignas(32) std::uint64_t ids[4];
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(ids), id);
    out[0] = ids[0];
    out[1] = ids[1];
    out[2] = ids[2];
    out[3] = ids[3];
}

void point_ids_avx2(const Points& pts, int depth, std::span<std::uint64_t> out) {
    const std::size_t size = pts.size();
    const std::size_t main = size - size % 4;
    for (std::size_t i = 0; i < main; i += 4)
        point_ids4(&pts.x[i], &pts.y[i], &pts.z[i], depth, &out[i]);
    for (std::size_t i = main; i < size; ++i)
        out[i] = detail::descend_point({pts.x[i], pts.y[i], pts.z[i]}, depth);
}

}  // namespace

const Ops& avx2_ops() {
    static const Ops ops = {halfspace_mask_avx2, convex_mask_avx2, region_mask_avx2,
                            point_ids_avx2};
    return ops;
}

}  // namespace htm::kernels

#endif  // HTM_KERNELS_HAVE_AVX2
