// SPDX-License-Identifier: Apache-2.0
#include "htm/simplify.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "htm/errors.hpp"

namespace htm {

namespace {

bool same_halfspace(const Halfspace& a, const Halfspace& b) {
    return std::fabs(a.normal.x - b.normal.x) <= kEpsGeom &&
           std::fabs(a.normal.y - b.normal.y) <= kEpsGeom &&
           std::fabs(a.normal.z - b.normal.z) <= kEpsGeom &&
           std::fabs(a.offset - b.offset) <= kEpsGeom;
}

}  // namespace

std::optional<Convex> trivial_simplify(const Convex& c) {
    std::vector<Halfspace> hs;
    hs.reserve(c.halfspaces.size());
    for (const Halfspace& h : c.halfspaces) {
        if (h.offset > 1.0) return std::nullopt;  // (iv)
        bool dup = false;
        for (const Halfspace& k : hs) dup = dup || same_halfspace(h, k);
        if (!dup) hs.push_back(h);  // (i)
    }
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j)
            if (same_halfspace(hs[i], hs[j].complement())) return std::nullopt;  // (ii)
    // (iii) whole-sphere members carry no constraint unless nothing else is left
    std::vector<Halfspace> kept;
    for (const Halfspace& h : hs)
        if (h.offset > -1.0) kept.push_back(h);
    if (kept.empty()) kept.push_back(hs.front());
    Convex out;
    out.halfspaces = std::move(kept);
    out.sort_by_arcangle();
    return out;
}

std::optional<Convex> pairwise_simplify(const Convex& c) {
    Convex out = c;
    out.sort_by_arcangle();
    auto& hs = out.halfspaces;
    // Smallest-vs-largest first; the larger cap of a nested pair is dropped.
    for (std::size_t i = 0; i < hs.size(); ++i) {
        for (std::size_t j = hs.size(); j-- > i + 1;) {
            const double alpha = hs[i].arcangle();
            const double beta = hs[j].arcangle();
            const double gamma = std::acos(clamp1(hs[i].normal.dot(hs[j].normal)));
            if (gamma >= alpha + beta) return std::nullopt;
            if (beta - alpha >= gamma) hs.erase(hs.begin() + static_cast<std::ptrdiff_t>(j));
        }
    }
    return out;
}

std::vector<Root> compute_roots(const Convex& c) {
    const auto& hs = c.halfspaces;
    std::vector<Root> roots;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
            const double c1 = hs[i].offset, c2 = hs[j].offset;
            const double g = hs[i].normal.dot(hs[j].normal);
            const double om = 1.0 - g * g;
            if (std::fabs(om) <= kEpsParallel) continue;
            const double u = (c1 - c2 * g) / om;
            const double v = (c2 - c1 * g) / om;
            // conditions for valid roots; equality (tangency) yields none
            if (om <= 0.0 || om <= c1 * c1 + c2 * c2 - 2.0 * c1 * c2 * g) continue;
            const double w = std::sqrt((1.0 - (u * u + v * v + 2.0 * u * v * g)) / om);
            const Vector3 base = u * hs[i].normal + v * hs[j].normal;
            const Vector3 cr = hs[i].normal.cross(hs[j].normal);
            roots.push_back({base + w * cr, static_cast<int>(i), static_cast<int>(j), 1, false});
            roots.push_back({base - w * cr, static_cast<int>(j), static_cast<int>(i), 1, false});
        }
    }
    for (Root& r : roots) {
        for (std::size_t k = 0; k < hs.size(); ++k) {
            if (static_cast<int>(k) == r.parent_a || static_cast<int>(k) == r.parent_b) continue;
            if (!hs[k].contains(r.position)) {
                r.flag = 0;  // provisional; select_masking_circles refines
                break;
            }
        }
    }
    return roots;
}

std::vector<int> select_masking_circles(const Convex& c, std::vector<Root>& roots) {
    const auto& hs = c.halfspaces;
    std::vector<char> in_s(hs.size(), 0);
    for (const Root& r : roots) {
        if (r.flag == 1) {
            in_s[static_cast<std::size_t>(r.parent_a)] = 1;
            in_s[static_cast<std::size_t>(r.parent_b)] = 1;
        }
    }
    auto maskers_of = [&](const Root& r) {
        std::vector<int> out;
        for (std::size_t k = 0; k < hs.size(); ++k) {
            if (static_cast<int>(k) == r.parent_a || static_cast<int>(k) == r.parent_b) continue;
            if (!hs[k].contains(r.position)) out.push_back(static_cast<int>(k));
        }
        return out;
    };
    for (Root& r : roots) {
        if (r.flag == 1) continue;
        if (!in_s[static_cast<std::size_t>(r.parent_a)] ||
            !in_s[static_cast<std::size_t>(r.parent_b)]) {
            r.flag = -1;
            continue;
        }
        bool masked_by_s = false;
        for (int k : maskers_of(r)) masked_by_s = masked_by_s || in_s[static_cast<std::size_t>(k)];
        r.flag = masked_by_s ? 0 : -2;
    }
    for (;;) {
        // count how many -2 roots each outside circle would eliminate
        std::map<int, int> count;
        for (const Root& r : roots) {
            if (r.flag != -2) continue;
            for (int k : maskers_of(r))
                if (!in_s[static_cast<std::size_t>(k)]) ++count[k];
        }
        if (count.empty()) break;
        int best = -1;
        for (const auto& [k, n] : count) {
            if (best < 0) {
                best = k;
                continue;
            }
            const int bn = count[best];
            if (n > bn || (n == bn && hs[static_cast<std::size_t>(k)].arcangle() <
                                          hs[static_cast<std::size_t>(best)].arcangle()))
                best = k;  // ties: smaller arcangle, then input order (map is index-ordered)
        }
        in_s[static_cast<std::size_t>(best)] = 1;
        for (Root& r : roots) {
            if (r.flag != -2) continue;
            if (!hs[static_cast<std::size_t>(best)].contains(r.position)) r.flag = 0;
        }
    }
    std::vector<int> s;
    for (std::size_t k = 0; k < hs.size(); ++k)
        if (in_s[k]) s.push_back(static_cast<int>(k));
    return s;
}

namespace {

// Westward unit vector of the frame of h; alpha = 0 convention at the poles.
Vector3 westward_axis(const Vector3& n) {
    if (std::fabs(n.x) < 1e-15 && std::fabs(n.y) < 1e-15) return {0.0, 1.0, 0.0};
    return Vector3{-n.y, n.x, 0.0}.normalized();
}

}  // namespace

Vector3 westward_point(const Halfspace& h) {
    if (std::fabs(h.offset) >= 1.0)
        throw DegenerateCircle("halfspace boundary is not a circle (|d| >= 1)");
    const Vector3 w = westward_axis(h.normal);
    const double sin_theta = std::sqrt(1.0 - h.offset * h.offset);
    return h.normal * h.offset - w * sin_theta;
}

double lateral_angle(const Halfspace& h, const Vector3& r) {
    const Vector3 w = westward_axis(h.normal);
    const Vector3 u = w.cross(h.normal);
    return std::atan2(w.dot(r), u.dot(r));
}

Vector3 circle_point(const Halfspace& h, double phi) {
    if (std::fabs(h.offset) >= 1.0)
        throw DegenerateCircle("halfspace boundary is not a circle (|d| >= 1)");
    const Vector3 w = westward_axis(h.normal);
    const Vector3 u = w.cross(h.normal);
    const double sin_theta = std::sqrt(1.0 - h.offset * h.offset);
    return h.normal * h.offset + (u * std::cos(phi) + w * std::sin(phi)) * sin_theta;
}

Visibility visibility(const Convex& c, int self) {
    const Vector3 p = westward_point(c.halfspaces[static_cast<std::size_t>(self)]);
    for (std::size_t k = 0; k < c.halfspaces.size(); ++k) {
        if (static_cast<int>(k) == self) continue;
        if (!c.halfspaces[k].contains(p)) return Visibility::Outside;
    }
    return Visibility::Inside;
}

std::vector<Arc> assemble_arcs(const Convex& c, const std::vector<Root>& roots) {
    std::vector<Arc> arcs;
    for (std::size_t h = 0; h < c.halfspaces.size(); ++h) {
        std::vector<int> mine;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (roots[i].flag != 1) continue;
            if (roots[i].parent_a == static_cast<int>(h) ||
                roots[i].parent_b == static_cast<int>(h))
                mine.push_back(static_cast<int>(i));
        }
        if (mine.empty()) continue;
        if (mine.size() == 1) {
            arcs.push_back({static_cast<int>(h), mine[0], mine[0]});
            continue;
        }
        const Halfspace& hs = c.halfspaces[h];
        std::sort(mine.begin(), mine.end(), [&](int a, int b) {
            return lateral_angle(hs, roots[static_cast<std::size_t>(a)].position) <
                   lateral_angle(hs, roots[static_cast<std::size_t>(b)].position);
        });
        // A root begins an arc when the counterclockwise tangent enters its
        // other parent's cap.
        auto begins = [&](int ri) {
            const Root& r = roots[static_cast<std::size_t>(ri)];
            const int other = r.parent_a == static_cast<int>(h) ? r.parent_b : r.parent_a;
            const Vector3 tangent = hs.normal.cross(r.position);
            return c.halfspaces[static_cast<std::size_t>(other)].normal.dot(tangent) > 0.0;
        };
        for (std::size_t k = 0; k < mine.size(); ++k) {
            if (!begins(mine[k])) continue;
            arcs.push_back({static_cast<int>(h), mine[k], mine[(k + 1) % mine.size()]});
        }
    }
    return arcs;
}

std::vector<Patch> assemble_patches(const Convex& c, const std::vector<Arc>& arcs) {
    std::vector<Patch> patches;
    std::vector<Arc> rooted;
    std::vector<Arc> hole_circles;
    for (const Arc& a : arcs) {
        if (!a.full_circle()) {
            rooted.push_back(a);
        } else if (c.halfspaces[static_cast<std::size_t>(a.halfspace)].sign() >= 0) {
            patches.push_back({{a}});  // bounding circles first
        } else {
            hole_circles.push_back(a);
        }
    }
    std::vector<char> used(rooted.size(), 0);
    for (;;) {
        int start = -1;
        for (std::size_t i = 0; i < rooted.size(); ++i) {
            if (used[i]) continue;
            if (start < 0 ||
                rooted[i].start_root < rooted[static_cast<std::size_t>(start)].start_root)
                start = static_cast<int>(i);
        }
        if (start < 0) break;
        Patch p;
        int cur = start;
        for (;;) {
            used[static_cast<std::size_t>(cur)] = 1;
            p.arcs.push_back(rooted[static_cast<std::size_t>(cur)]);
            const int want = rooted[static_cast<std::size_t>(cur)].end_root;
            if (want == p.arcs.front().start_root) break;
            int next = -1;
            for (std::size_t i = 0; i < rooted.size(); ++i) {
                if (!used[i] && rooted[i].start_root == want) {
                    next = static_cast<int>(i);
                    break;
                }
            }
            if (next < 0)
                throw MalformedBoundary("dangling arc: no successor for root " +
                                        std::to_string(want));
            cur = next;
        }
        patches.push_back(std::move(p));
    }
    for (const Arc& a : hole_circles) patches.push_back({{a}});  // holes last
    return patches;
}

namespace {

// Simplification of one convex; nullopt when NULL.
std::optional<SimplifiedConvex> simplify_convex(const Convex& input) {
    std::optional<Convex> t = trivial_simplify(input);
    if (!t) return std::nullopt;
    std::optional<Convex> p =
        t->halfspaces.size() > 1 ? pairwise_simplify(*t) : std::move(t);
    if (!p) return std::nullopt;
    Convex c = std::move(*p);

    std::vector<Root> roots = c.halfspaces.size() > 1 ? compute_roots(c) : std::vector<Root>{};
    std::vector<int> good_set = select_masking_circles(c, roots);
    std::vector<char> in_s(c.halfspaces.size(), 0);
    for (int k : good_set) in_s[static_cast<std::size_t>(k)] = 1;

    std::vector<char> rooted(c.halfspaces.size(), 0);
    std::vector<char> has_any_root(c.halfspaces.size(), 0);
    for (const Root& r : roots) {
        has_any_root[static_cast<std::size_t>(r.parent_a)] = 1;
        has_any_root[static_cast<std::size_t>(r.parent_b)] = 1;
        if (r.flag == 1) {
            rooted[static_cast<std::size_t>(r.parent_a)] = 1;
            rooted[static_cast<std::size_t>(r.parent_b)] = 1;
        }
    }

    // Decide the fate of every circle without good roots.  Positive circles
    // are always retained (they may swallow whole patches without their
    // circle showing).  Holes are removed only when provably idle: no circle
    // intersections at all, perimeter outside, and anti-center outside.
    std::vector<char> keep(c.halfspaces.size(), 1);
    std::vector<char> emit_circle(c.halfspaces.size(), 0);
    for (std::size_t h = 0; h < c.halfspaces.size(); ++h) {
        if (rooted[h]) continue;
        const Halfspace& hs = c.halfspaces[h];
        if (std::fabs(hs.offset) >= 1.0) continue;  // whole sphere: no circle to draw
        const bool visible = visibility(c, static_cast<int>(h)) == Visibility::Inside;
        if (hs.sign() >= 0) {
            // Unrooted bounding circle (kept either way) or masking circle.
            emit_circle[h] = visible || in_s[h];
        } else if (visible) {
            emit_circle[h] = 1;  // inside hole
        } else if (!has_any_root[h] && !in_s[h]) {
            bool anti_inside = true;
            for (std::size_t k = 0; k < c.halfspaces.size() && anti_inside; ++k)
                if (k != h) anti_inside = c.halfspaces[k].contains(-hs.normal);
            if (!anti_inside) keep[h] = 0;  // idle hole
        }
    }

    std::vector<Arc> arcs = assemble_arcs(c, roots);

    // Final list: survivors are arc parents plus retained holes/bounding circles.
    std::vector<int> remap(c.halfspaces.size(), -1);
    Convex final_convex;
    for (std::size_t h = 0; h < c.halfspaces.size(); ++h) {
        if (!keep[h]) continue;
        remap[h] = static_cast<int>(final_convex.halfspaces.size());
        final_convex.halfspaces.push_back(c.halfspaces[h]);
    }

    // Good roots survive; synthetic westward roots anchor the full circles.
    std::vector<Root> final_roots;
    std::vector<int> root_remap(roots.size(), -1);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (roots[i].flag != 1) continue;
        root_remap[i] = static_cast<int>(final_roots.size());
        Root r = roots[i];
        r.parent_a = remap[static_cast<std::size_t>(r.parent_a)];
        r.parent_b = remap[static_cast<std::size_t>(r.parent_b)];
        final_roots.push_back(r);
    }

    std::vector<Arc> final_arcs;
    std::vector<Arc> rooted_arcs;
    for (const Arc& a : arcs) {
        rooted_arcs.push_back({remap[static_cast<std::size_t>(a.halfspace)],
                               root_remap[static_cast<std::size_t>(a.start_root)],
                               root_remap[static_cast<std::size_t>(a.end_root)]});
    }
    auto add_circles = [&](bool holes) {
        for (std::size_t h = 0; h < c.halfspaces.size(); ++h) {
            if (!keep[h] || !emit_circle[h]) continue;
            if ((c.halfspaces[h].sign() < 0) != holes) continue;
            Root anchor{westward_point(c.halfspaces[h]), remap[h], remap[h], 1, true};
            const int rid = static_cast<int>(final_roots.size());
            final_roots.push_back(anchor);
            final_arcs.push_back({remap[h], rid, rid});
        }
    };
    add_circles(false);  // bounding circles
    for (const Arc& a : rooted_arcs) final_arcs.push_back(a);
    add_circles(true);  // holes

    SimplifiedConvex out;
    out.convex = std::move(final_convex);
    out.roots = std::move(final_roots);
    out.arcs = std::move(final_arcs);
    out.patches = assemble_patches(out.convex, out.arcs);
    return out;
}

}  // namespace

SimplifiedRegion simplify(const Region& r) {
    SimplifiedRegion out;
    for (const Convex& c : r.convexes) {
        if (c.halfspaces.empty()) continue;
        if (std::optional<SimplifiedConvex> sc = simplify_convex(c)) out.convexes.push_back(*sc);
    }
    return out;
}

}  // namespace htm
