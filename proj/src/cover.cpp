// SPDX-License-Identifier: Apache-2.0
#include "htm/cover.hpp"

#include <algorithm>

#include "htm/errors.hpp"
#include "htm/measure.hpp"

namespace htm {

namespace {

struct CoverBuilder {
    const Region& region;
    const CoverParams& params;
    std::vector<CoverEntry> entries;

    // `partial_in_family` is the partial count among t and its siblings
    // (the paper's P'), meaningless at the base-face level.
    void process_partial(const Trixel& t, int depth, int partial_in_family) {
        if (depth >= params.max_depth) {
            entries.push_back({t.id, false});
            return;
        }
        const std::array<Trixel, 4> kids = subdivide(t);
        std::array<Classification, 4> cls;
        int full = 0, partial = 0;
        for (int k = 0; k < 4; ++k) {
            cls[static_cast<std::size_t>(k)] =
                classify_region(kids[static_cast<std::size_t>(k)], region);
            if (cls[static_cast<std::size_t>(k)] == Classification::Inside) ++full;
            if (cls[static_cast<std::size_t>(k)] == Classification::Partial) ++partial;
        }
        const bool sibling_rule = depth >= params.min_depth && partial_in_family == 3;
        const bool halt = partial == 4 || full > 2 || (partial == 3 && full == 1) ||
                          (partial > 1 && sibling_rule);
        if (halt) {
            entries.push_back({t.id, false});
            return;
        }
        for (int k = 0; k < 4; ++k) {
            switch (cls[static_cast<std::size_t>(k)]) {
                case Classification::Inside:
                    entries.push_back({kids[static_cast<std::size_t>(k)].id, true});
                    break;
                case Classification::Partial:
                    process_partial(kids[static_cast<std::size_t>(k)], depth + 1, partial);
                    break;
                case Classification::Outside: break;
            }
        }
    }
};

int auto_min_depth(const SimplifiedRegion& r) {
    // Smallest depth whose mean trixel area fits the largest patch bounding
    // circle, clamped to [3,8].
    double largest = 0.0;
    bool any = false;
    for (const SimplifiedConvex& c : r.convexes) {
        for (const Patch& p : c.patches) {
            const Halfspace bc = patch_bounding_circle(c, p);
            largest = std::max(largest, 2.0 * kPi * (1.0 - clamp1(bc.offset)));
            any = true;
        }
    }
    if (!any) largest = 4.0 * kPi;
    int depth = 1;
    while (depth < 8 && kPi / (2.0 * std::pow(4.0, depth - 1)) > largest) ++depth;
    return std::clamp(depth, 3, 8);
}

}  // namespace

Cover cover(const SimplifiedRegion& r, CoverParams params) {
    if (params.min_depth == 0) params.min_depth = auto_min_depth(r);
    if (params.min_depth < 1 || params.min_depth > params.max_depth ||
        params.max_depth > params.range_depth || params.range_depth > kMaxDepth)
        throw Error("cover depths must satisfy 1 <= min <= max <= range <= 26");

    const Region region = r.region();
    CoverBuilder builder{region, params, {}};
    if (!region.convexes.empty()) {
        for (const Trixel& f : base_faces()) {
            switch (classify_region(f, region)) {
                case Classification::Inside: builder.entries.push_back({f.id, true}); break;
                case Classification::Partial: builder.process_partial(f, 1, 0); break;
                case Classification::Outside: break;
            }
        }
    }
    return {std::move(builder.entries), params.min_depth, params.max_depth, params.range_depth};
}

RangeSet to_ranges(const Cover& c, std::size_t max_ranges) {
    if (max_ranges < 1) throw InvalidBudget("need at least one range");
    RangeSet out;
    out.depth = c.range_depth;
    out.intervals.reserve(c.entries.size());
    for (const CoverEntry& e : c.entries) {
        const int shift = 2 * (c.range_depth - e.id.depth());
        const std::uint64_t lo = e.id.value() << shift;
        const std::uint64_t hi = lo + ((std::uint64_t{1} << shift) - 1);
        out.intervals.push_back({lo, hi, e.full});
    }
    std::sort(out.intervals.begin(), out.intervals.end(),
              [](const RangeSet::Interval& a, const RangeSet::Interval& b) { return a.lo < b.lo; });
    // Lossless merge of consecutive intervals.
    std::vector<RangeSet::Interval> merged;
    for (const RangeSet::Interval& iv : out.intervals) {
        if (!merged.empty() && merged.back().hi + 1 == iv.lo) {
            merged.back().hi = iv.hi;
            merged.back().full = merged.back().full && iv.full;
        } else {
            merged.push_back(iv);
        }
    }
    // Budget merges swallow the smallest gap first; the swallowed ids are
    // overshoot and force the fine filter.
    while (merged.size() > max_ranges) {
        std::size_t best = 0;
        std::uint64_t best_gap = ~std::uint64_t{0};
        for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
            const std::uint64_t gap = merged[i + 1].lo - merged[i].hi - 1;
            if (gap < best_gap) {
                best_gap = gap;
                best = i;
            }
        }
        merged[best].hi = merged[best + 1].hi;
        merged[best].full = false;
        merged.erase(merged.begin() + static_cast<std::ptrdiff_t>(best) + 1);
    }
    out.intervals = std::move(merged);
    return out;
}

}  // namespace htm
