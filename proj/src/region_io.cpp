// SPDX-License-Identifier: Apache-2.0
#include "htm/region_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "htm/errors.hpp"

namespace htm {

namespace {

std::string upper(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

double parse_real(const std::string& tok, int line_no) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": expected a number, got '" + tok +
                         "'");
    }
}

}  // namespace

Region read_region(std::istream& in) {
    Region region;
    Convex* cur = nullptr;
    auto open_convex = [&]() -> Convex& {
        region.convexes.emplace_back();
        cur = &region.convexes.back();
        return *cur;
    };
    std::string line;
    int line_no = 0;
    bool saw_region = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        kw = upper(kw);
        std::vector<double> args;
        std::string tok;
        while (ls >> tok) args.push_back(parse_real(tok, line_no));

        if (kw == "REGION") {
            saw_region = true;
        } else if (kw == "CONVEX") {
            open_convex();
        } else if (kw == "HALFSPACE") {
            if (args.size() != 4)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": HALFSPACE needs x y z d");
            Convex& c = cur ? *cur : open_convex();
            const Vector3 n{args[0], args[1], args[2]};
            if (n.norm() < kEpsGeom)
                throw ParseError("line " + std::to_string(line_no) + ": zero halfspace normal");
            c.halfspaces.push_back({n.normalized(), args[3]});
        } else if (kw == "CIRCLE") {
            if (args.size() != 3)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": CIRCLE needs lon lat radius");
            Convex& c = cur ? *cur : open_convex();
            c.halfspaces.push_back(cap_halfspace(args[0], args[1], args[2]));
        } else if (kw == "POLY") {
            if (args.size() < 6 || args.size() % 2 != 0)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": POLY needs at least 3 lon/lat pairs");
            Convex& c = cur ? *cur : open_convex();
            std::vector<Vector3> verts;
            for (std::size_t i = 0; i < args.size(); i += 2)
                verts.push_back(from_lonlat_deg(args[i], args[i + 1]));
            for (const Halfspace& h : polygon_convex(verts).halfspaces) c.halfspaces.push_back(h);
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown keyword '" + kw + "'");
        }
    }
    if (!saw_region && region.convexes.empty())
        throw ParseError("no REGION found in input");
    for (Convex& c : region.convexes) c.sort_by_arcangle();
    return region;
}

Region read_region_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open region file: " + path);
    return read_region(in);
}

Region parse_region(const std::string& text) {
    std::istringstream in(text);
    return read_region(in);
}

namespace {

void print_real(std::ostream& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf;
}

}  // namespace

void write_region(std::ostream& out, const Region& r) {
    out << "REGION\n";
    for (const Convex& c : r.convexes) {
        out << "CONVEX\n";
        for (const Halfspace& h : c.halfspaces) {
            out << "HALFSPACE ";
            print_real(out, h.normal.x);
            out << ' ';
            print_real(out, h.normal.y);
            out << ' ';
            print_real(out, h.normal.z);
            out << ' ';
            print_real(out, h.offset);
            out << '\n';
        }
    }
}

std::string region_to_string(const Region& r) {
    std::ostringstream out;
    write_region(out, r);
    return out.str();
}

void write_patches(std::ostream& out, const SimplifiedRegion& r) {
    int patch_no = 0;
    for (const SimplifiedConvex& c : r.convexes) {
        for (const Patch& p : c.patches) {
            out << "PATCH " << patch_no++ << '\n';
            for (const Arc& a : p.arcs) {
                const Vector3& s = c.roots[static_cast<std::size_t>(a.start_root)].position;
                const Vector3& e = c.roots[static_cast<std::size_t>(a.end_root)].position;
                out << "ARC " << a.halfspace;
                for (double v : {s.x, s.y, s.z, e.x, e.y, e.z}) {
                    out << ' ';
                    print_real(out, v);
                }
                out << '\n';
            }
        }
    }
}

}  // namespace htm
