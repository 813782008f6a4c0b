#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "medimark/errors.hpp"

namespace medimark {

// Embedding plane selector. lsb = bit 0, bit2 = bit 1, bit3 = bit 2.
enum class BitPlane : std::uint8_t {
    lsb = 0,
    bit2 = 1,
    bit3 = 2,
};

inline constexpr std::array<BitPlane, 3> all_bit_planes = {BitPlane::lsb, BitPlane::bit2,
                                                           BitPlane::bit3};

constexpr int bit_index(BitPlane plane) {
    return static_cast<int>(plane);
}

constexpr std::uint8_t plane_mask(BitPlane plane) {
    return static_cast<std::uint8_t>(1u << bit_index(plane));
}

constexpr std::string_view to_string(BitPlane plane) {
    switch (plane) {
    case BitPlane::lsb: return "lsb";
    case BitPlane::bit2: return "bit2";
    case BitPlane::bit3: return "bit3";
    }
    return "?";
}

inline BitPlane parse_bit_plane(std::string_view name) {
    if (name == "lsb") return BitPlane::lsb;
    if (name == "bit2") return BitPlane::bit2;
    if (name == "bit3") return BitPlane::bit3;
    throw Error("unknown bit plane (expected lsb, bit2 or bit3)");
}

} // namespace medimark
