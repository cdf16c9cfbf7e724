// SPDX-License-Identifier: Apache-2.0
#include "htm/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "htm/errors.hpp"
#include "htm/kernels/kernels.hpp"
#include "htm/mesh.hpp"

namespace htm {

namespace {

// 4*pi steradians expressed in square arcminutes.
constexpr double kSphereArcmin2 = 4.0 * kPi * (10800.0 / kPi) * (10800.0 / kPi);

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    for (std::string& s : out) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
            s.pop_back();
    }
    return out;
}

bool parse_double(const std::string& s, double& out) {
    try {
        std::size_t pos = 0;
        out = std::stod(s, &pos);
        return pos == s.size();
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

Catalog ingest_csv(std::istream& in, IngestReport* report) {
    IngestReport local;
    IngestReport& rep = report ? *report : local;
    Catalog cat;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const std::vector<std::string> cols = split_csv(line);
        if (!header_seen) {
            if (cols.size() != 3 || cols[0] != "id" || cols[1] != "lon_deg" ||
                cols[2] != "lat_deg")
                throw ParseError("expected header 'id,lon_deg,lat_deg'");
            header_seen = true;
            continue;
        }
        auto reject = [&](const std::string& why) {
            ++rep.skipped;
            rep.errors.push_back("line " + std::to_string(line_no) + ": " + why);
        };
        if (cols.size() != 3) {
            reject("expected 3 columns, got " + std::to_string(cols.size()));
            continue;
        }
        double lon, lat;
        if (cols[0].empty()) {
            reject("empty object id");
            continue;
        }
        if (!parse_double(cols[1], lon) || !parse_double(cols[2], lat)) {
            reject("unparseable coordinates");
            continue;
        }
        if (lat < -90.0 || lat > 90.0) {
            reject("latitude out of [-90,90]");
            continue;
        }
        ++rep.parsed;
        cat.entries.push_back({cols[0], from_lonlat_deg(lon, lat).normalized(), 0});
    }
    if (!header_seen) throw ParseError("empty catalog: missing header");
    return cat;
}

Catalog ingest_csv_file(const std::string& path, IngestReport* report) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open catalog file: " + path);
    return ingest_csv(in, report);
}

IndexedCatalog IndexedCatalog::build(Catalog cat, int index_depth) {
    if (index_depth < 1 || index_depth > kMaxDepth)
        throw DepthLimitExceeded("index depth must be in [1,26]");
    IndexedCatalog idx;
    idx.depth_ = index_depth;
    idx.entries_ = std::move(cat.entries);

    const std::size_t n = idx.entries_.size();
    std::vector<double> xs(n), ys(n), zs(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = idx.entries_[i].position.x;
        ys[i] = idx.entries_[i].position.y;
        zs[i] = idx.entries_[i].position.z;
    }
    std::vector<std::uint64_t> ids(n);
    kernels::point_ids({xs, ys, zs}, index_depth, ids);
    for (std::size_t i = 0; i < n; ++i) idx.entries_[i].htm_id = ids[i];

    std::stable_sort(idx.entries_.begin(), idx.entries_.end(),
                     [](const CatalogEntry& a, const CatalogEntry& b) {
                         return a.htm_id < b.htm_id ||
                                (a.htm_id == b.htm_id && a.object_id < b.object_id);
                     });
    return idx;
}

double IndexedCatalog::measured_density() const {
    return static_cast<double>(entries_.size()) / kSphereArcmin2;
}

std::pair<std::size_t, std::size_t> IndexedCatalog::scan(std::uint64_t lo,
                                                         std::uint64_t hi) const {
    const auto first = std::lower_bound(
        entries_.begin(), entries_.end(), lo,
        [](const CatalogEntry& e, std::uint64_t v) { return e.htm_id < v; });
    const auto last = std::upper_bound(
        entries_.begin(), entries_.end(), hi,
        [](std::uint64_t v, const CatalogEntry& e) { return v < e.htm_id; });
    return {static_cast<std::size_t>(first - entries_.begin()),
            static_cast<std::size_t>(last - entries_.begin())};
}

namespace {

constexpr char kIndexMagic[8] = {'H', 'T', 'M', 'I', 'D', 'X', '1', '\0'};

void put_u32(std::string& buf, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_u64(std::string& buf, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_f64(std::string& buf, double d) {
    std::uint64_t v;
    std::memcpy(&v, &d, 8);
    put_u64(buf, v);
}

class Reader {
  public:
    Reader(const std::string& data, const std::string& path) : data_(data), path_(path) {}

    std::uint32_t u32() { return static_cast<std::uint32_t>(raw(4)); }
    std::uint64_t u64() { return raw(8); }
    double f64() {
        const std::uint64_t v = raw(8);
        double d;
        std::memcpy(&d, &v, 8);
        return d;
    }
    const char* bytes(std::size_t n) {
        need(n);
        const char* p = data_.data() + pos_;
        pos_ += n;
        return p;
    }
    std::size_t pos() const { return pos_; }

  private:
    std::uint64_t raw(int n) {
        need(static_cast<std::size_t>(n));
        std::uint64_t v = 0;
        for (int i = 0; i < n; ++i)
            v |= static_cast<std::uint64_t>(static_cast<unsigned char>(data_[pos_ + static_cast<std::size_t>(i)]))
                 << (8 * i);
        pos_ += static_cast<std::size_t>(n);
        return v;
    }
    void need(std::size_t n) {
        if (pos_ + n > data_.size()) throw ParseError("truncated index file: " + path_);
    }
    const std::string& data_;
    const std::string& path_;
    std::size_t pos_ = 0;
};

}  // namespace

void IndexedCatalog::save(const std::string& path) const {
    std::string buf;
    buf.append(kIndexMagic, sizeof kIndexMagic);
    put_u32(buf, 1);
    put_u32(buf, static_cast<std::uint32_t>(depth_));
    put_u64(buf, entries_.size());
    std::string blob;
    std::vector<std::uint64_t> offsets;
    offsets.reserve(entries_.size());
    for (const CatalogEntry& e : entries_) {
        offsets.push_back(blob.size());
        blob.append(e.object_id);
        blob.push_back('\0');
    }
    put_u64(buf, blob.size());
    for (const CatalogEntry& e : entries_) put_u64(buf, e.htm_id);
    for (const CatalogEntry& e : entries_) {
        put_f64(buf, e.position.x);
        put_f64(buf, e.position.y);
        put_f64(buf, e.position.z);
    }
    for (std::uint64_t off : offsets) put_u64(buf, off);
    buf += blob;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write index file: " + path);
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw Error("short write to index file: " + path);
}

IndexedCatalog IndexedCatalog::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open index file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string data = ss.str();
    Reader r(data, path);
    if (std::memcmp(r.bytes(8), kIndexMagic, 8) != 0)
        throw ParseError("not an htm index file: " + path);
    if (r.u32() != 1) throw ParseError("unsupported index version: " + path);
    const int depth = static_cast<int>(r.u32());
    const std::uint64_t count = r.u64();
    const std::uint64_t blob_size = r.u64();

    IndexedCatalog idx;
    idx.depth_ = depth;
    idx.entries_.resize(count);
    for (std::uint64_t i = 0; i < count; ++i) idx.entries_[i].htm_id = r.u64();
    for (std::uint64_t i = 0; i < count; ++i) {
        idx.entries_[i].position.x = r.f64();
        idx.entries_[i].position.y = r.f64();
        idx.entries_[i].position.z = r.f64();
    }
    std::vector<std::uint64_t> offsets(count);
    for (std::uint64_t i = 0; i < count; ++i) offsets[i] = r.u64();
    const char* blob = r.bytes(blob_size);
    for (std::uint64_t i = 0; i < count; ++i) {
        if (offsets[i] >= blob_size && count > 0)
            throw ParseError("corrupt string table in index file: " + path);
        idx.entries_[i].object_id.assign(blob + offsets[i]);
    }
    for (std::uint64_t i = 1; i < count; ++i) {
        if (idx.entries_[i - 1].htm_id > idx.entries_[i].htm_id)
            throw ParseError("index file is not sorted: " + path);
    }
    return idx;
}

namespace {

std::vector<std::size_t> query_candidates(const IndexedCatalog& idx, const SimplifiedRegion& r,
                                          const QueryOptions& opts, QueryCounters& counters) {
    CoverParams params;
    params.range_depth = idx.index_depth();
    params.max_depth = opts.max_depth > 0 ? opts.max_depth : std::min(20, idx.index_depth());
    params.min_depth = opts.min_depth;
    if (params.min_depth > 0) params.min_depth = std::min(params.min_depth, params.max_depth);

    const Cover cov = cover(r, params);
    const RangeSet ranges = to_ranges(cov, opts.max_ranges);

    std::vector<std::size_t> accepted;
    std::vector<std::size_t> pending;  // candidates that need the fine filter
    for (const RangeSet::Interval& iv : ranges.intervals) {
        ++counters.ranges;
        iv.full ? ++counters.full_ranges : ++counters.partial_ranges;
        const auto [first, last] = idx.scan(iv.lo, iv.hi);
        counters.candidates += last - first;
        for (std::size_t i = first; i < last; ++i)
            (iv.full ? accepted : pending).push_back(i);
    }

    if (!pending.empty()) {
        counters.fine_tests += pending.size();
        std::vector<double> xs(pending.size()), ys(pending.size()), zs(pending.size());
        for (std::size_t k = 0; k < pending.size(); ++k) {
            const Vector3& p = idx.entries()[pending[k]].position;
            xs[k] = p.x;
            ys[k] = p.y;
            zs[k] = p.z;
        }
        std::vector<std::uint8_t> mask(pending.size());
        const Region plain = r.region();
        kernels::region_mask(plain, kEpsGeom, {xs, ys, zs}, mask);
        for (std::size_t k = 0; k < pending.size(); ++k)
            if (mask[k]) accepted.push_back(pending[k]);
    }
    counters.accepted += accepted.size();
    return accepted;
}

}  // namespace

std::vector<std::string> query_region(const IndexedCatalog& idx, const SimplifiedRegion& r,
                                      const QueryOptions& opts, QueryCounters* counters) {
    QueryCounters local;
    QueryCounters& ctr = counters ? *counters : local;
    std::vector<std::string> out;
    for (std::size_t i : query_candidates(idx, r, opts, ctr))
        out.push_back(idx.entries()[i].object_id);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NearbyHit> nearby(const IndexedCatalog& idx, double lon_deg, double lat_deg,
                              double radius_deg, const QueryOptions& opts,
                              QueryCounters* counters) {
    if (!(radius_deg > 0.0)) throw InvalidRadius("radius must be positive");
    QueryCounters local;
    QueryCounters& ctr = counters ? *counters : local;
    const Vector3 center = from_lonlat_deg(lon_deg, lat_deg);
    Region region;
    region.convexes.push_back(Convex({Halfspace{center, std::cos(deg2rad(radius_deg))}}));
    const SimplifiedRegion simplified = simplify(region);

    std::vector<NearbyHit> out;
    for (std::size_t i : query_candidates(idx, simplified, opts, ctr)) {
        const CatalogEntry& e = idx.entries()[i];
        out.push_back({e.object_id, rad2deg(distance_rad(center, e.position))});
    }
    std::sort(out.begin(), out.end(), [](const NearbyHit& a, const NearbyHit& b) {
        return a.distance_deg < b.distance_deg ||
               (a.distance_deg == b.distance_deg && a.object_id < b.object_id);
    });
    return out;
}

int suggest_depth(const CostModel& m) {
    if (!(m.probe_ratio > 0.0) || !(m.density > 0.0))
        throw Error("cost model needs R > 0 and D > 0");
    const double d = std::floor(12.0 - std::log(m.probe_ratio / m.density) / std::log(4.0));
    return static_cast<int>(std::clamp(d, 1.0, 26.0));
}

double break_even_area_arcmin2(const CostModel& m) {
    return 12.0 * m.probe_ratio / m.density;
}

double mean_trixel_area_arcmin2(int depth) {
    return kSphereArcmin2 / (8.0 * std::pow(4.0, depth - 1));
}

}  // namespace htm
