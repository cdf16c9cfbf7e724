// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "htm/errors.hpp"

namespace htm {

// IDs append two bits per level below the leading 11 (N) / 10 (S) pair, so a
// 64-bit value can hold depth 31.  Constructors cap at depth 26, where double
// precision stops resolving trixel sides.
inline constexpr int kMaxDepth = 26;

inline constexpr int depth_of_raw(std::uint64_t value) {
    // floor(log4(value))
    return (std::bit_width(value) - 1) / 2;
}

inline constexpr bool id_is_valid(std::uint64_t value, int max_depth = kMaxDepth) {
    if (value < 8) return false;
    const int msb = std::bit_width(value) - 1;
    if ((msb & 1) == 0) return false;  // leading 2-bit group must be 10 or 11
    return depth_of_raw(value) <= max_depth;
}

class HtmId {
  public:
    explicit HtmId(std::uint64_t value) : value_(value) {
        if (!id_is_valid(value))
            throw InvalidId("invalid HtmId " + std::to_string(value));
    }

    std::uint64_t value() const { return value_; }
    int depth() const { return depth_of_raw(value_); }

    // Index of the base face (0..7 = S0..S3,N0..N3).
    int base_face() const { return static_cast<int>(value_ >> (2 * (depth() - 1))) - 8; }

    // Child index (0..3) at level `level` (1-based, level 1 is the base face).
    int child_at(int level) const {
        return static_cast<int>((value_ >> (2 * (depth() - level))) & 3u);
    }

    HtmId child(int k) const {
        if (depth() >= kMaxDepth)
            throw DepthLimitExceeded("child of depth-" + std::to_string(depth()) + " id");
        return HtmId((value_ << 2) | static_cast<std::uint64_t>(k & 3));
    }

    HtmId parent() const {
        if (depth() <= 1) throw InvalidId("base face has no parent");
        return HtmId(value_ >> 2);
    }

    friend bool operator==(HtmId a, HtmId b) { return a.value_ == b.value_; }
    friend auto operator<=>(HtmId a, HtmId b) { return a.value_ <=> b.value_; }

  private:
    std::uint64_t value_;
};

int depth_of(HtmId id);

HtmId name_to_id(const std::string& name);
std::string id_to_name(HtmId id);

}  // namespace htm
