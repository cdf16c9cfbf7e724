// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "htm/cover.hpp"
#include "htm/geometry.hpp"
#include "htm/simplify.hpp"

namespace htm {

struct CatalogEntry {
    std::string object_id;
    Vector3 position;
    std::uint64_t htm_id = 0;  // filled by the index build
};

struct Catalog {
    std::vector<CatalogEntry> entries;
};

struct IngestReport {
    std::size_t parsed = 0;
    std::size_t skipped = 0;
    std::vector<std::string> errors;  // one message per skipped row, with line number
};

// CSV with header `id,lon_deg,lat_deg`; malformed rows are reported and
// skipped.
Catalog ingest_csv(std::istream& in, IngestReport* report = nullptr);
Catalog ingest_csv_file(const std::string& path, IngestReport* report = nullptr);

// Ordered in-memory index over HtmIds at a fixed depth; stands in for the
// database B-tree of the original deployment.
class IndexedCatalog {
  public:
    static IndexedCatalog build(Catalog cat, int index_depth = 21);

    int index_depth() const { return depth_; }
    std::size_t size() const { return entries_.size(); }
    const std::vector<CatalogEntry>& entries() const { return entries_; }

    // Objects per square arcminute over the whole sphere.
    double measured_density() const;

    // Indices [first, last) of entries with htm_id in [lo, hi].
    std::pair<std::size_t, std::size_t> scan(std::uint64_t lo, std::uint64_t hi) const;

    // Sorted binary file: little-endian ids, positions, and an offset table
    // into a string blob (see README for the exact layout).
    void save(const std::string& path) const;
    static IndexedCatalog load(const std::string& path);

  private:
    int depth_ = 21;
    std::vector<CatalogEntry> entries_;  // ascending (htm_id, object_id)
};

struct QueryCounters {
    std::uint64_t ranges = 0;          // range scans issued (B-tree probes)
    std::uint64_t full_ranges = 0;     // ranges whose candidates skip the fine filter
    std::uint64_t partial_ranges = 0;
    std::uint64_t candidates = 0;      // entries returned by the scans
    std::uint64_t fine_tests = 0;      // point-in-region evaluations
    std::uint64_t accepted = 0;
};

struct QueryOptions {
    std::size_t max_ranges = 256;
    int min_depth = 0;  // 0 = auto
    int max_depth = 0;  // 0 = min(20, index depth)
};

// Cover -> ranges at the index depth -> range scans -> fine filter for
// candidates from partial-provenance ranges.  Output sorted by object id.
std::vector<std::string> query_region(const IndexedCatalog& idx, const SimplifiedRegion& r,
                                      const QueryOptions& opts = {},
                                      QueryCounters* counters = nullptr);

struct NearbyHit {
    std::string object_id;
    double distance_deg = 0.0;
};

// Cone search: single-halfspace region with d = cos(radius); distances via
// the half-chord asin.  Results sorted by distance, then object id.
std::vector<NearbyHit> nearby(const IndexedCatalog& idx, double lon_deg, double lat_deg,
                              double radius_deg, const QueryOptions& opts = {},
                              QueryCounters* counters = nullptr);

struct CostModel {
    double probe_ratio = 5.0;  // R: B-tree probe cost / inside-region test cost
    double density = 40.0;     // D: objects per square arcminute
};

// floor(12 - log4(R/D)), clamped to [1, 26].
int suggest_depth(const CostModel& m);

// Break-even trixel area 12 R / D in square arcminutes.
double break_even_area_arcmin2(const CostModel& m);

// Mean trixel area at `depth` in square arcminutes.
double mean_trixel_area_arcmin2(int depth);

}  // namespace htm
