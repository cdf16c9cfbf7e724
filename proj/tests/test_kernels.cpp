// SPDX-License-Identifier: Apache-2.0
// Backend equivalence: wide kernels must match the scalar reference
// bit-for-bit, including tie-breaking on boundary points.
#include <doctest.h>

#include "htm/errors.hpp"
#include "htm/kernels/kernels.hpp"
#include "htm/mesh.hpp"
#include "htm/simplify.hpp"
#include "test_support.hpp"

using namespace htm;
using htmtest::rng;
using htmtest::SoA;

namespace {

struct BackendGuard {
    ~BackendGuard() { kernels::set_backend(kernels::Backend::Auto); }
};

bool avx2_available() {
    try {
        kernels::set_backend(kernels::Backend::Avx2);
        kernels::set_backend(kernels::Backend::Auto);
        return true;
    } catch (const Error&) {
        return false;
    }
}

// Random points plus adversarial ones: octahedron vertices, edge seams,
// trixel corners, and points constructed exactly on halfspace circles.
SoA adversarial_points(std::uint64_t seed, std::size_t n_random) {
    auto g = rng(seed);
    SoA pts = htmtest::random_units(g, n_random);
    const double s = 1.0 / std::sqrt(2.0);
    for (const Vector3& v :
         {Vector3{0, 0, 1}, Vector3{0, 0, -1}, Vector3{1, 0, 0}, Vector3{0, 1, 0},
          Vector3{-1, 0, 0}, Vector3{0, -1, 0}, Vector3{s, s, 0}, Vector3{s, 0, s},
          Vector3{0, s, s}, Vector3{-s, s, 0}, Vector3{0, -s, s}, Vector3{s, -s, 0}})
        pts.push(v);
    std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
    for (int i = 0; i < 37; ++i) pts.push({std::cos(u(g)), std::sin(u(g)), 0.0});
    for_each_trixel(3, [&](const Trixel& t) {
        if ((t.id.value() & 7) == 0) pts.push(trixel_centroid(t));
        if ((t.id.value() & 7) == 1) pts.push(t.v0);
    });
    return pts;
}

}  // namespace

TEST_SUITE_BEGIN("kernels");

TEST_CASE("backend dispatch") {
    BackendGuard guard;
    kernels::set_backend(kernels::Backend::Scalar);
    CHECK(kernels::active_backend() == kernels::Backend::Scalar);
    kernels::set_backend(kernels::Backend::Auto);
    CHECK(kernels::active_backend() != kernels::Backend::Auto);  // resolved
    CHECK(kernels::backend_name(kernels::Backend::Avx2) == "avx2");
}

TEST_CASE("point ids match the single-point path") {
    BackendGuard guard;
    const SoA pts = adversarial_points(7, 500);
    for (auto backend : {kernels::Backend::Scalar, kernels::Backend::Avx2}) {
        if (backend == kernels::Backend::Avx2 && !avx2_available()) continue;
        kernels::set_backend(backend);
        for (int depth : {1, 2, 5, 8, 20}) {
            std::vector<std::uint64_t> ids(pts.size());
            kernels::point_ids(pts.points(), depth, ids);
            for (std::size_t i = 0; i < pts.size(); ++i) {
                const Vector3 p{pts.x[i], pts.y[i], pts.z[i]};
                CHECK(ids[i] == point_to_id(p, depth).value());
            }
        }
    }
}

TEST_CASE("avx2 output is bit-identical to scalar") {
    if (!avx2_available()) return;
    BackendGuard guard;
    const SoA pts = adversarial_points(11, 4003);  // odd size exercises the tail

    for (int depth : {1, 3, 9, 14, 21, 26}) {
        std::vector<std::uint64_t> a(pts.size()), b(pts.size());
        kernels::set_backend(kernels::Backend::Scalar);
        kernels::point_ids(pts.points(), depth, a);
        kernels::set_backend(kernels::Backend::Avx2);
        kernels::point_ids(pts.points(), depth, b);
        CHECK(a == b);
    }

    auto g = rng(13);
    Region region;
    for (int c = 0; c < 3; ++c) {
        Convex cv;
        const int nh = 1 + c;
        for (int h = 0; h < nh; ++h) {
            std::uniform_real_distribution<double> ud(-0.9, 0.95);
            cv.halfspaces.push_back({htmtest::random_unit(g), ud(g)});
        }
        cv.sort_by_arcangle();
        region.convexes.push_back(cv);
    }
    // extra boundary points: exactly on the first circle of each convex
    SoA pts2 = pts;
    for (const Convex& cv : region.convexes) {
        for (int k = 0; k < 64; ++k)
            pts2.push(circle_point(cv.halfspaces.front(), k * kPi / 32.0));
    }
    std::vector<std::uint8_t> ma(pts2.size()), mb(pts2.size());
    kernels::set_backend(kernels::Backend::Scalar);
    kernels::region_mask(region, kEpsGeom, pts2.points(), ma);
    kernels::set_backend(kernels::Backend::Avx2);
    kernels::region_mask(region, kEpsGeom, pts2.points(), mb);
    CHECK(ma == mb);

    const Halfspace h0 = region.convexes[0].halfspaces[0];
    kernels::halfspace_mask(h0.normal, h0.offset, kEpsGeom, pts2.points(), mb);
    kernels::set_backend(kernels::Backend::Scalar);
    kernels::halfspace_mask(h0.normal, h0.offset, kEpsGeom, pts2.points(), ma);
    CHECK(ma == mb);
}

TEST_CASE("masks agree with the scalar contains predicates") {
    BackendGuard guard;
    auto g = rng(17);
    const SoA pts = htmtest::random_units(g, 2001);
    Convex cv;
    cv.halfspaces.push_back({Vector3{0, 0, 1}, 0.3});
    cv.halfspaces.push_back({htmtest::random_unit(g), -0.2});
    cv.sort_by_arcangle();
    Region region;
    region.convexes.push_back(cv);
    region.convexes.push_back(Convex({Halfspace{htmtest::random_unit(g), 0.8}}));

    for (auto backend : {kernels::Backend::Scalar, kernels::Backend::Avx2}) {
        if (backend == kernels::Backend::Avx2 && !avx2_available()) continue;
        kernels::set_backend(backend);
        std::vector<std::uint8_t> mask(pts.size());
        kernels::convex_mask(cv, kEpsGeom, pts.points(), mask);
        for (std::size_t i = 0; i < pts.size(); ++i)
            CHECK(static_cast<bool>(mask[i]) ==
                  cv.contains({pts.x[i], pts.y[i], pts.z[i]}));
        kernels::region_mask(region, kEpsGeom, pts.points(), mask);
        for (std::size_t i = 0; i < pts.size(); ++i)
            CHECK(static_cast<bool>(mask[i]) ==
                  region.contains({pts.x[i], pts.y[i], pts.z[i]}));
    }
}

TEST_CASE("empty convex masks nothing") {
    BackendGuard guard;
    auto g = rng(23);
    const SoA pts = htmtest::random_units(g, 9);
    std::vector<std::uint8_t> mask(pts.size(), 2);
    kernels::convex_mask(Convex{}, kEpsGeom, pts.points(), mask);
    for (std::uint8_t m : mask) CHECK(m == 0);
}

TEST_SUITE_END();
