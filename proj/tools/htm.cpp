// SPDX-License-Identifier: Apache-2.0
// Command-line front end: mesh lookups, region simplification, covers,
// areas, hulls, catalog indexing and queries.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "htm/catalog.hpp"
#include "htm/cover.hpp"
#include "htm/errors.hpp"
#include "htm/measure.hpp"
#include "htm/mesh.hpp"
#include "htm/region_io.hpp"

using nlohmann::json;

namespace {

bool g_json = false;

void emit(const json& j, const std::string& text) {
    if (g_json)
        std::cout << j.dump() << '\n';
    else
        std::cout << text << '\n';
}

std::string hex_id(std::uint64_t v) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(v));
    return buf;
}

json vec_json(const htm::Vector3& v) { return json::array({v.x, v.y, v.z}); }

htm::HtmId parse_id_or_name(const std::string& s) {
    if (!s.empty() && (s[0] == 'N' || s[0] == 'S')) return htm::name_to_id(s);
    try {
        return htm::HtmId(std::stoull(s));
    } catch (const std::invalid_argument&) {
        throw htm::InvalidName("neither a trixel name nor an id: '" + s + "'");
    } catch (const std::out_of_range&) {
        throw htm::InvalidId("id out of range: '" + s + "'");
    }
}

int cmd_lookup(double lon, double lat, int depth) {
    const htm::HtmId id = htm::point_to_id(htm::from_lonlat_deg(lon, lat), depth);
    const std::string name = htm::id_to_name(id);
    emit({{"name", name}, {"id", id.value()}, {"hex", hex_id(id.value())}},
         name + " " + std::to_string(id.value()) + " " + hex_id(id.value()));
    return 0;
}

int cmd_vertices(const std::string& key) {
    const htm::Trixel t = htm::id_to_trixel(parse_id_or_name(key));
    const std::string name = htm::id_to_name(t.id);
    if (g_json) {
        emit({{"name", name},
              {"id", t.id.value()},
              {"v0", vec_json(t.v0)},
              {"v1", vec_json(t.v1)},
              {"v2", vec_json(t.v2)}},
             "");
        return 0;
    }
    std::cout << name << " " << t.id.value() << " " << hex_id(t.id.value()) << '\n';
    for (const auto& [tag, v] :
         {std::pair{"v0", t.v0}, std::pair{"v1", t.v1}, std::pair{"v2", t.v2}}) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s %.17g %.17g %.17g", tag, v.x, v.y, v.z);
        std::cout << buf << '\n';
    }
    return 0;
}

int cmd_cover(const std::string& region_file, int min_depth, int max_depth, int range_depth,
              std::size_t max_ranges, const std::string& format) {
    const htm::SimplifiedRegion r = htm::simplify(htm::read_region_file(region_file));
    htm::CoverParams params;
    params.min_depth = min_depth;
    params.max_depth = max_depth;
    params.range_depth = range_depth;
    const htm::Cover cov = htm::cover(r, params);
    if (format == "ranges") {
        const htm::RangeSet ranges = htm::to_ranges(cov, max_ranges);
        for (const auto& iv : ranges.intervals) {
            emit({{"lo", iv.lo}, {"hi", iv.hi}, {"full", iv.full}},
                 std::to_string(iv.lo) + " " + std::to_string(iv.hi));
        }
        return 0;
    }
    for (const htm::CoverEntry& e : cov.entries) {
        const std::string name = htm::id_to_name(e.id);
        if (format == "names")
            emit({{"name", name}, {"full", e.full}}, name);
        else
            emit({{"id", e.id.value()}, {"full", e.full}}, std::to_string(e.id.value()));
    }
    return 0;
}

int cmd_simplify(const std::string& region_file, bool with_arcs) {
    const htm::SimplifiedRegion r = htm::simplify(htm::read_region_file(region_file));
    if (g_json) {
        json convexes = json::array();
        for (const htm::SimplifiedConvex& c : r.convexes) {
            json hs = json::array();
            for (const htm::Halfspace& h : c.convex.halfspaces)
                hs.push_back({{"normal", vec_json(h.normal)}, {"offset", h.offset}});
            convexes.push_back({{"halfspaces", hs}, {"patches", c.patches.size()}});
        }
        std::cout << json{{"convexes", convexes}}.dump() << '\n';
        return 0;
    }
    htm::write_region(std::cout, r.region());
    if (with_arcs) htm::write_patches(std::cout, r);
    return 0;
}

int cmd_area(const std::string& region_file) {
    const htm::SimplifiedRegion r = htm::simplify(htm::read_region_file(region_file));
    const htm::AreaResult a = htm::region_area(r);
    const double deg2 = a.steradians * (180.0 / htm::kPi) * (180.0 / htm::kPi);
    if (a.overlap_warning)
        std::cerr << "warning: convex bounding circles overlap; area is the sum over patches\n";
    char buf[96];
    std::snprintf(buf, sizeof buf, "steradians %.17g\ndeg2 %.17g", a.steradians, deg2);
    emit({{"steradians", a.steradians}, {"deg2", deg2}, {"overlap_warning", a.overlap_warning}},
         buf);
    return 0;
}

int cmd_hull(const std::string& points_file, const std::string& out_file) {
    htm::IngestReport report;
    const htm::Catalog cat = htm::ingest_csv_file(points_file, &report);
    for (const std::string& e : report.errors) std::cerr << points_file << ": " << e << '\n';
    std::vector<htm::Vector3> pts;
    pts.reserve(cat.entries.size());
    for (const htm::CatalogEntry& e : cat.entries) pts.push_back(e.position);
    const htm::HullResult hull = htm::convex_hull(pts);
    htm::Region region;
    region.convexes.push_back(hull.convex);
    if (!out_file.empty()) {
        std::ofstream out(out_file);
        if (!out) throw htm::Error("cannot write " + out_file);
        htm::write_region(out, region);
    } else if (g_json) {
        json verts = json::array();
        for (const htm::Vector3& v : hull.vertices) verts.push_back(vec_json(v));
        std::cout << json{{"vertices", verts}, {"region", htm::region_to_string(region)}}.dump()
                  << '\n';
    } else {
        htm::write_region(std::cout, region);
    }
    return 0;
}

int cmd_build_index(const std::string& in_file, const std::string& out_file, int depth,
                    bool strict) {
    htm::IngestReport report;
    const htm::Catalog cat = htm::ingest_csv_file(in_file, &report);
    for (const std::string& e : report.errors) std::cerr << in_file << ": " << e << '\n';
    const htm::IndexedCatalog idx = htm::IndexedCatalog::build(cat, depth);
    idx.save(out_file);
    emit({{"indexed", idx.size()},
          {"skipped", report.skipped},
          {"depth", depth},
          {"density_arcmin2", idx.measured_density()}},
         "indexed " + std::to_string(idx.size()) + " objects at depth " + std::to_string(depth) +
             " (skipped " + std::to_string(report.skipped) + ")");
    return strict && report.skipped > 0 ? 2 : 0;
}

void print_counters(const htm::QueryCounters& c) {
    const json j = {{"ranges", c.ranges},
                    {"full_ranges", c.full_ranges},
                    {"partial_ranges", c.partial_ranges},
                    {"candidates", c.candidates},
                    {"fine_tests", c.fine_tests},
                    {"accepted", c.accepted}};
    if (g_json) {
        std::cout << json{{"counters", j}}.dump() << '\n';
    } else {
        std::cerr << "counters: ranges=" << c.ranges << " full=" << c.full_ranges
                  << " partial=" << c.partial_ranges << " candidates=" << c.candidates
                  << " fine_tests=" << c.fine_tests << " accepted=" << c.accepted << '\n';
    }
}

int cmd_query(const std::string& index_file, const std::string& region_file,
              std::size_t max_ranges, bool counters) {
    const htm::IndexedCatalog idx = htm::IndexedCatalog::load(index_file);
    const htm::SimplifiedRegion r = htm::simplify(htm::read_region_file(region_file));
    htm::QueryOptions opts;
    opts.max_ranges = max_ranges;
    htm::QueryCounters ctr;
    for (const std::string& id : htm::query_region(idx, r, opts, &ctr))
        emit({{"id", id}}, id);
    if (counters) print_counters(ctr);
    return 0;
}

int cmd_nearby(const std::string& index_file, double lon, double lat, double radius_deg,
               double radius_nm, std::size_t max_ranges, bool counters) {
    if (radius_deg > 0.0 && radius_nm > 0.0)
        throw htm::InvalidRadius("give either --radius or --radius-nm, not both");
    // one nautical mile = one arcminute
    const double radius = radius_nm > 0.0 ? radius_nm / 60.0 : radius_deg;
    const htm::IndexedCatalog idx = htm::IndexedCatalog::load(index_file);
    htm::QueryOptions opts;
    opts.max_ranges = max_ranges;
    htm::QueryCounters ctr;
    for (const htm::NearbyHit& hit : htm::nearby(idx, lon, lat, radius, opts, &ctr)) {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%s %.9f", hit.object_id.c_str(), hit.distance_deg);
        emit({{"id", hit.object_id}, {"distance_deg", hit.distance_deg}}, buf);
    }
    if (counters) print_counters(ctr);
    return 0;
}

int cmd_stats(int depth) {
    const htm::MeshStats s = htm::mesh_stats(depth);
    if (g_json) {
        std::cout << json{{"depth", s.depth},
                          {"count", s.count},
                          {"area_min", s.area_min},
                          {"area_max", s.area_max},
                          {"area_mean", s.area_mean},
                          {"area_rel_variance", s.area_rel_variance},
                          {"arc_min", s.arc_min},
                          {"arc_max", s.arc_max},
                          {"arc_mean", s.arc_mean},
                          {"arc_rel_variance", s.arc_rel_variance},
                          {"min_inner_angle", s.min_inner_angle},
                          {"max_inner_angle", s.max_inner_angle}}
                         .dump()
                  << '\n';
        return 0;
    }
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "depth %d\ncount %llu\narea_min %.12g\narea_max %.12g\narea_mean %.12g\n"
                  "area_rel_variance %.6f\narc_min %.12g\narc_max %.12g\narc_mean %.12g\n"
                  "arc_rel_variance %.6f\nmin_inner_angle %.12g\nmax_inner_angle %.12g",
                  s.depth, static_cast<unsigned long long>(s.count), s.area_min, s.area_max,
                  s.area_mean, s.area_rel_variance, s.arc_min, s.arc_max, s.arc_mean,
                  s.arc_rel_variance, s.min_inner_angle, s.max_inner_angle);
    std::cout << buf << '\n';
    return 0;
}

int cmd_depth_suggest(double ratio, double density) {
    const htm::CostModel m{ratio, density};
    const int depth = htm::suggest_depth(m);
    const double break_even = htm::break_even_area_arcmin2(m);
    const double mean_area = htm::mean_trixel_area_arcmin2(depth);
    char buf[192];
    std::snprintf(buf, sizeof buf,
                  "depth %d\nbreak_even_arcmin2 %.6g\nmean_trixel_area_arcmin2 %.6g", depth,
                  break_even, mean_area);
    emit({{"depth", depth},
          {"break_even_arcmin2", break_even},
          {"mean_trixel_area_arcmin2", mean_area}},
         buf);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hierarchical triangular mesh toolkit"};
    app.require_subcommand(1);
    app.add_flag("--json", g_json, "one JSON object per output line");

    double lon = 0, lat = 0;
    int lookup_depth = 20, index_depth = 21, stats_depth = 7;
    auto* lookup = app.add_subcommand("lookup", "trixel name and id of a point");
    lookup->add_option("LON", lon, "longitude in degrees")->required();
    lookup->add_option("LAT", lat, "latitude in degrees")->required();
    lookup->add_option("--depth", lookup_depth, "mesh depth")->check(CLI::Range(1, 26));

    std::string key;
    auto* vertices = app.add_subcommand("vertices", "vertex vectors of a trixel");
    vertices->add_option("ID", key, "trixel id or name")->required();

    std::string region_file;
    int min_depth = 0, max_depth = 20, range_depth = 21;
    std::size_t max_ranges = 256;
    std::string format = "ids";
    auto* cover_cmd = app.add_subcommand("cover", "trixel cover of a region");
    cover_cmd->add_option("--region", region_file, "region file")->required();
    cover_cmd->add_option("--min-depth", min_depth, "0 = automatic");
    cover_cmd->add_option("--max-depth", max_depth, "");
    cover_cmd->add_option("--range-depth", range_depth, "");
    cover_cmd->add_option("--max-ranges", max_ranges, "range budget");
    cover_cmd->add_option("--format", format, "ids|names|ranges")
        ->check(CLI::IsMember({"ids", "names", "ranges"}));

    bool with_arcs = false;
    auto* simplify_cmd = app.add_subcommand("simplify", "simplify a region");
    simplify_cmd->add_option("--region", region_file, "region file")->required();
    simplify_cmd->add_flag("--arcs", with_arcs, "also print PATCH/ARC lines");

    auto* area_cmd = app.add_subcommand("area", "area of a region");
    area_cmd->add_option("--region", region_file, "region file")->required();

    std::string points_file, out_file;
    auto* hull_cmd = app.add_subcommand("hull", "spherical convex hull of points");
    hull_cmd->add_option("--points", points_file, "CSV id,lon_deg,lat_deg")->required();
    hull_cmd->add_option("--out", out_file, "write region here instead of stdout");

    std::string index_file;
    bool strict = false;
    auto* build_cmd = app.add_subcommand("build-index", "ingest a CSV catalog");
    build_cmd->add_option("--in", points_file, "CSV id,lon_deg,lat_deg")->required();
    build_cmd->add_option("--out", index_file, "index file")->required();
    build_cmd->add_option("--depth", index_depth, "index depth")->check(CLI::Range(1, 26));
    build_cmd->add_flag("--strict", strict, "fail if any row was skipped");

    bool counters = false;
    auto* query_cmd = app.add_subcommand("query", "objects inside a region");
    query_cmd->add_option("--index", index_file, "index file")->required();
    query_cmd->add_option("--region", region_file, "region file")->required();
    query_cmd->add_option("--max-ranges", max_ranges, "range budget");
    query_cmd->add_flag("--counters", counters, "print probe/compare counters");

    double radius_deg = 0, radius_nm = 0;
    auto* nearby_cmd = app.add_subcommand("nearby", "cone search around a point");
    nearby_cmd->add_option("--index", index_file, "index file")->required();
    nearby_cmd->add_option("--lon", lon, "longitude in degrees")->required();
    nearby_cmd->add_option("--lat", lat, "latitude in degrees")->required();
    nearby_cmd->add_option("--radius", radius_deg, "radius in degrees");
    nearby_cmd->add_option("--radius-nm", radius_nm, "radius in nautical miles");
    nearby_cmd->add_option("--max-ranges", max_ranges, "range budget");
    nearby_cmd->add_flag("--counters", counters, "print probe/compare counters");

    auto* stats_cmd = app.add_subcommand("stats", "mesh statistics at a depth");
    stats_cmd->add_option("--depth", stats_depth, "mesh depth")->required()->check(CLI::Range(1, 10));

    double ratio = 5.0, density = 0.0;
    auto* suggest_cmd = app.add_subcommand("depth-suggest", "cost-model depth heuristic");
    suggest_cmd->add_option("--r", ratio, "probe-to-compare cost ratio");
    suggest_cmd->add_option("--density", density, "objects per square arcminute")->required();

    try {
        app.parse(argc, argv);
        if (*lookup) return cmd_lookup(lon, lat, lookup_depth);
        if (*vertices) return cmd_vertices(key);
        if (*cover_cmd)
            return cmd_cover(region_file, min_depth, max_depth, range_depth, max_ranges, format);
        if (*simplify_cmd) return cmd_simplify(region_file, with_arcs);
        if (*area_cmd) return cmd_area(region_file);
        if (*hull_cmd) return cmd_hull(points_file, out_file);
        if (*build_cmd) return cmd_build_index(points_file, index_file, index_depth, strict);
        if (*query_cmd) return cmd_query(index_file, region_file, max_ranges, counters);
        if (*nearby_cmd)
            return cmd_nearby(index_file, lon, lat, radius_deg, radius_nm, max_ranges, counters);
        if (*stats_cmd) return cmd_stats(stats_depth);
        if (*suggest_cmd) return cmd_depth_suggest(ratio, density);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const htm::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
