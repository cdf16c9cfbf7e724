// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <set>

#include "htm/errors.hpp"
#include "htm/htmid.hpp"
#include "htm/mesh.hpp"
#include "test_support.hpp"

using namespace htm;
using htmtest::rng;

namespace {

bool close(const Vector3& a, const Vector3& b, double tol = 1e-15) {
    return (a - b).norm() <= tol;
}

// Independent oracle for the base-face tie rule: first closed-triangle hit in
// the order of the face table.
int brute_force_face(const Vector3& p) {
    for (const Trixel& f : base_faces()) {
        const bool in = f.v0.cross(f.v1).dot(p) >= -kEpsGeom &&
                        f.v1.cross(f.v2).dot(p) >= -kEpsGeom &&
                        f.v2.cross(f.v0).dot(p) >= -kEpsGeom;
        if (in) return static_cast<int>(f.id.value());
    }
    return -1;
}

}  // namespace

TEST_SUITE_BEGIN("mesh");

TEST_CASE("base faces match the octahedron assignments") {
    const auto& faces = base_faces();
    CHECK(faces[0].id.value() == 8);  // S0
    CHECK(close(faces[0].v0, {1, 0, 0}));
    CHECK(close(faces[0].v1, {0, 0, -1}));
    CHECK(close(faces[0].v2, {0, 1, 0}));
    CHECK(faces[4].id.value() == 12);  // N0
    CHECK(close(faces[4].v0, {1, 0, 0}));
    CHECK(close(faces[4].v1, {0, 0, 1}));
    CHECK(close(faces[4].v2, {0, -1, 0}));
    for (const Trixel& f : faces) {
        CHECK(f.id.value() >= 8);
        CHECK(f.id.value() <= 15);
        CHECK(f.v0.cross(f.v1).dot(f.v2) > 0.0);  // counterclockwise
    }
}

TEST_CASE("subdivision midpoints and child layout") {
    const Trixel n0 = id_to_trixel(HtmId(12));
    const auto kids = subdivide(n0);
    const double s = 1.0 / std::sqrt(2.0);
    // w0 = (v1+v2)/|.|, w1 = (v0+v2)/|.|, w2 = (v0+v1)/|.|
    CHECK(close(kids[3].v0, {0, -s, s}, 1e-15));
    CHECK(close(kids[3].v1, {s, -s, 0}, 1e-15));
    CHECK(close(kids[3].v2, {s, 0, s}, 1e-15));
    CHECK(close(kids[0].v0, n0.v0));
    CHECK(close(kids[1].v0, n0.v1));
    CHECK(close(kids[2].v0, n0.v2));
    CHECK(kids[0].id.value() == 48);
    CHECK(kids[1].id.value() == 49);
    CHECK(kids[2].id.value() == 50);
    CHECK(kids[3].id.value() == 51);
    for (const Trixel& k : kids) CHECK(k.v0.cross(k.v1).dot(k.v2) > 0.0);
}

TEST_CASE("subdivision depth cap") {
    Trixel t = base_faces()[0];
    for (int d = 1; d < kMaxDepth; ++d) t = subdivide(t)[3];
    CHECK(t.id.depth() == kMaxDepth);
    CHECK_THROWS_AS(subdivide(t), DepthLimitExceeded);
}

TEST_CASE("point_to_id worked examples") {
    const Vector3 p = Vector3{1, 1, 1}.normalized();
    CHECK(point_to_id(p, 1).value() == 15);  // N3
    CHECK(point_to_id(p, 2).value() == 63);  // N33
    // The north pole lies on four faces; the S faces exclude it and N0 wins.
    CHECK(brute_force_face({0, 0, 1}) == 12);
    CHECK(point_to_id({0, 0, 1}, 1).value() == 12);
    CHECK_THROWS_AS(point_to_id({1, 1, 1}, 4), InvalidVector);
    CHECK_THROWS_AS(point_to_id(p, 0), DepthLimitExceeded);
    CHECK_THROWS_AS(point_to_id(p, 27), DepthLimitExceeded);
}

TEST_CASE("boundary points agree with the brute-force tie order") {
    auto g = rng(101);
    // corners, edge midpoints, and random edge points of the base octahedron
    std::vector<Vector3> pts = {{0, 0, 1}, {0, 0, -1}, {1, 0, 0}, {0, 1, 0},
                                {-1, 0, 0}, {0, -1, 0}};
    const double s = 1.0 / std::sqrt(2.0);
    pts.insert(pts.end(), {{s, s, 0}, {s, 0, s}, {0, s, s}, {-s, s, 0}, {s, -s, 0}, {0, -s, s}});
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double a = u(g) * 2.0 * kPi;  // random equator point (on S|N face seams)
        pts.push_back({std::cos(a), std::sin(a), 0.0});
    }
    for (const Vector3& p : pts)
        CHECK(point_to_id(p, 1).value() == static_cast<std::uint64_t>(brute_force_face(p)));
}

TEST_CASE("id_to_trixel replays the construction") {
    const Trixel t = id_to_trixel(HtmId(12));
    CHECK(close(t.v0, {1, 0, 0}));
    CHECK(close(t.v1, {0, 0, 1}));
    CHECK(close(t.v2, {0, -1, 0}));

    // N33 is the nested center child of a symmetric face.
    const Trixel c = id_to_trixel(name_to_id("N33"));
    const double a01 = angle_between(c.v0, c.v1);
    const double a12 = angle_between(c.v1, c.v2);
    const double a20 = angle_between(c.v2, c.v0);
    CHECK(std::fabs(a01 - a12) < 1e-12);
    CHECK(std::fabs(a12 - a20) < 1e-12);

    CHECK_THROWS_AS(id_to_trixel(HtmId(4)), InvalidId);   // below S0
    CHECK_THROWS_AS(HtmId(16), InvalidId);                // leading bits not 10/11
    CHECK_THROWS_AS(HtmId(std::uint64_t{1} << 60), InvalidId);  // even leading bit
    CHECK_THROWS_AS(HtmId(std::uint64_t{0b11} << 54), InvalidId);  // depth 27
}

TEST_CASE("round trip through centroids at depth 8") {
    auto g = rng(77);
    std::uniform_int_distribution<int> face(8, 15), child(0, 3);
    for (int i = 0; i < 1000; ++i) {
        std::uint64_t v = static_cast<std::uint64_t>(face(g));
        for (int d = 1; d < 8; ++d) v = (v << 2) | static_cast<std::uint64_t>(child(g));
        const HtmId id(v);
        const Trixel t = id_to_trixel(id);
        CHECK(point_to_id(trixel_centroid(t), 8).value() == v);
    }
}

TEST_CASE("name and id codec") {
    CHECK(name_to_id("N01").value() == 49);
    CHECK(name_to_id("S0").value() == 8);
    CHECK(depth_of(HtmId(8)) == 1);
    CHECK(depth_of(HtmId(49)) == 2);
    CHECK(id_to_name(HtmId(49)) == "N01");
    CHECK(id_to_name(HtmId(8)) == "S0");
    CHECK_THROWS_AS(name_to_id("X0"), InvalidName);
    CHECK_THROWS_AS(name_to_id("N4"), InvalidName);
    CHECK_THROWS_AS(name_to_id("N"), InvalidName);
    CHECK_THROWS_AS(name_to_id("N0123456789012345678901234567"), InvalidName);
}

TEST_CASE("codec round trip: exhaustive to depth 5, random to depth 8") {
    // depth <= 5: every name
    std::vector<std::string> names = {"S0", "S1", "S2", "S3", "N0", "N1", "N2", "N3"};
    std::size_t checked = 0;
    for (int d = 1; d <= 5; ++d) {
        std::vector<std::string> next;
        for (const std::string& n : names) {
            CHECK(id_to_name(name_to_id(n)) == n);
            ++checked;
            if (d < 5)
                for (char c : {'0', '1', '2', '3'}) next.push_back(n + c);
        }
        names = std::move(next);
    }
    CHECK(checked == 8 + 32 + 128 + 512 + 2048);
    auto g = rng(5);
    std::uniform_int_distribution<int> face(0, 7), digit(0, 3);
    const char* fnames[] = {"S0", "S1", "S2", "S3", "N0", "N1", "N2", "N3"};
    for (int i = 0; i < 2000; ++i) {
        std::string n = fnames[face(g)];
        for (int d = 1; d < 8; ++d) n += static_cast<char>('0' + digit(g));
        CHECK(id_to_name(name_to_id(n)) == n);
    }
}

TEST_CASE("depth-1 statistics are octahedral") {
    const MeshStats s = mesh_stats(1);
    CHECK(s.count == 8);
    CHECK(s.area_min == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK(s.area_max == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK(s.min_inner_angle == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK(s.max_inner_angle == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK_THROWS_AS(mesh_stats(0), DepthLimitExceeded);
    CHECK_THROWS_AS(mesh_stats(11), DepthLimitExceeded);
}

TEST_CASE("depth-7 statistics match the published scatter") {
    const MeshStats s = mesh_stats(7);
    CHECK(s.count == 8u * (1u << 12));  // 8 * 4^6
    CHECK(s.area_rel_variance == doctest::Approx(0.2427).epsilon(0.01));
    CHECK(s.arc_rel_variance == doctest::Approx(0.1502).epsilon(0.01));
    const double canon = kPi / 128.0;  // pi / 2^7
    CHECK(s.arc_mean / canon == doctest::Approx(1.2326).epsilon(0.005));
    CHECK(std::fabs(s.arc_min - canon) < 1e-12);
    CHECK(s.area_max / s.area_min == doctest::Approx(2.105).epsilon(0.01));
    // published bands
    CHECK(s.area_rel_variance > 0.21);
    CHECK(s.area_rel_variance < 0.27);
    CHECK(s.arc_rel_variance > 0.13);
    CHECK(s.arc_rel_variance < 0.17);
}

TEST_CASE("node counts, area conservation, angle bounds at depths 1..8") {
    for (int d = 1; d <= 8; ++d) {
        std::uint64_t count = 0;
        double area = 0.0;
        double amin = 10.0, amax = 0.0;
        for_each_trixel(d, [&](const Trixel& t) {
            ++count;
            area += trixel_area(t);
            CHECK(t.v0.cross(t.v1).dot(t.v2) > 0.0);
            (void)t;
        });
        CHECK(count == 8ull << (2 * (d - 1)));
        CHECK(std::fabs(area - 4.0 * kPi) / (4.0 * kPi) < 1e-8);
        const MeshStats s = d <= 8 ? mesh_stats(d) : MeshStats{};
        amin = s.min_inner_angle;
        amax = s.max_inner_angle;
        CHECK(amin >= kPi / 4 - 1e-9);
        CHECK(amax <= kPi / 2 + 1e-9);
    }
}

TEST_CASE("partition: depth-d id is the 2-bit prefix of the depth-(d+1) id") {
    auto g = rng(42);
    for (int i = 0; i < 20000; ++i) {
        const Vector3 p = htmtest::random_unit(g);
        std::uint64_t prev = 0;
        for (int d = 1; d <= 8; ++d) {
            const std::uint64_t id = point_to_id(p, d).value();
            if (d > 1) CHECK(id >> 2 == prev);
            prev = id;
        }
    }
}

TEST_SUITE_END();
