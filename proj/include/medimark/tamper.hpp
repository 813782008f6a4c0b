#pragma once

#include <cstdint>
#include <string_view>
#include <utility>

#include "medimark/errors.hpp"
#include "medimark/image.hpp"
#include "medimark/rng.hpp"

namespace medimark {

enum class ChannelSelect : std::uint8_t {
    red = 0,
    green = 1,
    blue = 2,
};

constexpr std::string_view to_string(ChannelSelect c) {
    switch (c) {
    case ChannelSelect::red: return "R";
    case ChannelSelect::green: return "G";
    case ChannelSelect::blue: return "B";
    }
    return "?";
}

enum class TamperKind : std::uint8_t {
    constant_overwrite,
    cross_channel_copy,
};

// Rectangular pixel region: rows x cols starting at (row, col).
struct Region {
    int row = 0;
    int col = 0;
    int rows = 0;
    int cols = 0;

    friend bool operator==(const Region&, const Region&) = default;
};

// One intentional modification: overwrite a region of the target
// channel with a constant, or with the same-pixel samples of another
// channel.
struct TamperSpec {
    TamperKind kind = TamperKind::constant_overwrite;
    ChannelSelect target = ChannelSelect::red;
    ChannelSelect source = ChannelSelect::blue;  // cross_channel_copy only
    std::uint8_t value = 0;                      // constant_overwrite only
    Region region;
};

namespace detail {

inline void require_inside(const RgbImage& image, const Region& region) {
    if (region.rows < 1 || region.cols < 1 || region.row < 0 || region.col < 0 ||
        region.row + region.rows > image.height || region.col + region.cols > image.width)
        throw RegionOutOfBounds("tamper region does not lie inside the image");
}

} // namespace detail

// Returns a copy with the region's target-channel samples overwritten;
// every other sample is untouched.
inline RgbImage apply_tamper(const RgbImage& image, const TamperSpec& spec) {
    detail::require_valid(image);
    detail::require_inside(image, spec.region);
    RgbImage out = image;
    const int target = static_cast<int>(spec.target);
    const int source = static_cast<int>(spec.source);
    for (int r = spec.region.row; r < spec.region.row + spec.region.rows; ++r) {
        for (int c = spec.region.col; c < spec.region.col + spec.region.cols; ++c) {
            out.sample(r, c, target) = spec.kind == TamperKind::constant_overwrite
                                           ? spec.value
                                           : out.sample(r, c, source);
        }
    }
    return out;
}

// Draws one attack from the observed menu (red<-blue copy, blue<-green
// copy, red<-1, red<-255) at a uniformly random in-bounds placement.
// Same seed, same result, on every platform.
inline std::pair<RgbImage, TamperSpec> random_tamper(const RgbImage& image, int block_rows,
                                                     int block_cols, std::uint64_t seed) {
    detail::require_valid(image);
    if (block_rows < 1 || block_cols < 1 || block_rows > image.height || block_cols > image.width)
        throw RegionOutOfBounds("tamper block exceeds image dimensions");
    SplitMix64 rng(seed);
    TamperSpec spec;
    switch (rng.below(4)) {
    case 0:
        spec = {TamperKind::cross_channel_copy, ChannelSelect::red, ChannelSelect::blue, 0, {}};
        break;
    case 1:
        spec = {TamperKind::cross_channel_copy, ChannelSelect::blue, ChannelSelect::green, 0, {}};
        break;
    case 2:
        spec = {TamperKind::constant_overwrite, ChannelSelect::red, ChannelSelect::red, 1, {}};
        break;
    default:
        spec = {TamperKind::constant_overwrite, ChannelSelect::red, ChannelSelect::red, 255, {}};
        break;
    }
    spec.region.row = static_cast<int>(rng.below(static_cast<std::uint64_t>(image.height - block_rows + 1)));
    spec.region.col = static_cast<int>(rng.below(static_cast<std::uint64_t>(image.width - block_cols + 1)));
    spec.region.rows = block_rows;
    spec.region.cols = block_cols;
    return {apply_tamper(image, spec), spec};
}

} // namespace medimark
