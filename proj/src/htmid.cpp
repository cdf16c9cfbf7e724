// SPDX-License-Identifier: Apache-2.0
#include "htm/htmid.hpp"

namespace htm {

int depth_of(HtmId id) { return id.depth(); }

HtmId name_to_id(const std::string& name) {
    if (name.size() < 2) throw InvalidName("name too short: '" + name + "'");
    if (name.size() > static_cast<std::size_t>(kMaxDepth) + 1)
        throw InvalidName("name deeper than depth 26: '" + name + "'");
    std::uint64_t v;
    if (name[0] == 'N')
        v = 3;
    else if (name[0] == 'S')
        v = 2;
    else
        throw InvalidName("name must start with N or S: '" + name + "'");
    for (std::size_t i = 1; i < name.size(); ++i) {
        const char c = name[i];
        if (c < '0' || c > '3') throw InvalidName("bad digit in name: '" + name + "'");
        v = (v << 2) | static_cast<std::uint64_t>(c - '0');
    }
    return HtmId(v);
}

std::string id_to_name(HtmId id) {
    const int d = id.depth();
    std::string out;
    out.reserve(static_cast<std::size_t>(d) + 1);
    out.push_back(id.base_face() < 4 ? 'S' : 'N');
    out.push_back(static_cast<char>('0' + (id.base_face() & 3)));
    for (int level = 2; level <= d; ++level)
        out.push_back(static_cast<char>('0' + id.child_at(level)));
    return out;
}

}  // namespace htm
