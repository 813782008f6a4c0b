#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <tuple>
#include <vector>

#include "medimark/errors.hpp"

namespace medimark {

// Pre-padding size of a channel, kept around so the output can be
// cropped back after block encryption.
struct Dims {
    int rows = 0;
    int cols = 0;

    friend bool operator==(const Dims&, const Dims&) = default;
};

// One 8-bit plane, row-major.
struct Channel {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    Channel() = default;

    Channel(int width_, int height_, std::uint8_t fill = 0)
        : width(width_), height(height_) {
        if (width < 1 || height < 1)
            throw SizeError("channel dimensions must be at least 1x1");
        data.assign(static_cast<std::size_t>(width) * height, fill);
    }

    std::uint8_t at(int row, int col) const {
        return data[static_cast<std::size_t>(row) * width + col];
    }
    std::uint8_t& at(int row, int col) {
        return data[static_cast<std::size_t>(row) * width + col];
    }

    Dims dims() const { return {height, width}; }
    std::size_t sample_count() const { return data.size(); }

    friend bool operator==(const Channel&, const Channel&) = default;
};

// 8-bit three-channel raster, interleaved R,G,B per pixel, row-major.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    RgbImage() = default;

    RgbImage(int width_, int height_) : width(width_), height(height_) {
        if (width < 1 || height < 1)
            throw SizeError("image dimensions must be at least 1x1");
        data.assign(static_cast<std::size_t>(width) * height * 3, 0);
    }

    std::size_t pixel_count() const {
        return static_cast<std::size_t>(width) * height;
    }
    std::size_t sample_count() const { return data.size(); }

    // channel: 0 = R, 1 = G, 2 = B
    std::uint8_t sample(int row, int col, int channel) const {
        return data[(static_cast<std::size_t>(row) * width + col) * 3 + channel];
    }
    std::uint8_t& sample(int row, int col, int channel) {
        return data[(static_cast<std::size_t>(row) * width + col) * 3 + channel];
    }

    friend bool operator==(const RgbImage&, const RgbImage&) = default;
};

namespace detail {

inline void require_valid(const RgbImage& image) {
    if (image.width < 1 || image.height < 1)
        throw SizeError("image dimensions must be at least 1x1");
    if (image.data.size() != static_cast<std::size_t>(image.width) * image.height * 3)
        throw SizeError("image buffer length does not match dimensions");
}

inline void require_valid(const Channel& c) {
    if (c.width < 1 || c.height < 1)
        throw SizeError("channel dimensions must be at least 1x1");
    if (c.data.size() != static_cast<std::size_t>(c.width) * c.height)
        throw SizeError("channel buffer length does not match dimensions");
}

} // namespace detail

// Splits an image into its (R, G, B) planes. Lossless: compose inverts it.
inline std::tuple<Channel, Channel, Channel> decompose(const RgbImage& image) {
    detail::require_valid(image);
    Channel r(image.width, image.height);
    Channel g(image.width, image.height);
    Channel b(image.width, image.height);
    const std::size_t n = image.pixel_count();
    for (std::size_t i = 0; i < n; ++i) {
        r.data[i] = image.data[i * 3 + 0];
        g.data[i] = image.data[i * 3 + 1];
        b.data[i] = image.data[i * 3 + 2];
    }
    return {std::move(r), std::move(g), std::move(b)};
}

// Interleaves three equally sized planes back into one image.
inline RgbImage compose(const Channel& r, const Channel& g, const Channel& b) {
    detail::require_valid(r);
    detail::require_valid(g);
    detail::require_valid(b);
    if (r.dims() != g.dims() || r.dims() != b.dims())
        throw DimensionMismatch("compose requires three channels of identical dimensions");
    RgbImage image(r.width, r.height);
    const std::size_t n = image.pixel_count();
    for (std::size_t i = 0; i < n; ++i) {
        image.data[i * 3 + 0] = r.data[i];
        image.data[i * 3 + 1] = g.data[i];
        image.data[i * 3 + 2] = b.data[i];
    }
    return image;
}

inline int padded_extent(int extent) {
    const int rem = extent % 8;
    return rem == 0 ? extent : extent + (8 - rem);
}

// Grows a channel so both extents are multiples of 8; the original
// samples stay in the top-left region and new samples are zero.
inline Channel pad_to_multiple_of_8(const Channel& c) {
    detail::require_valid(c);
    const int new_w = padded_extent(c.width);
    const int new_h = padded_extent(c.height);
    if (new_w == c.width && new_h == c.height)
        return c;
    Channel padded(new_w, new_h);
    for (int row = 0; row < c.height; ++row) {
        const auto* src = c.data.data() + static_cast<std::size_t>(row) * c.width;
        auto* dst = padded.data.data() + static_cast<std::size_t>(row) * new_w;
        std::copy(src, src + c.width, dst);
    }
    return padded;
}

// Returns the top-left d.rows x d.cols region.
inline Channel crop(const Channel& c, Dims d) {
    detail::require_valid(c);
    if (d.rows < 1 || d.cols < 1)
        throw DimensionMismatch("crop target must be at least 1x1");
    if (d.rows > c.height || d.cols > c.width)
        throw DimensionMismatch("crop target exceeds channel dimensions");
    if (d.rows == c.height && d.cols == c.width)
        return c;
    Channel out(d.cols, d.rows);
    for (int row = 0; row < d.rows; ++row) {
        const auto* src = c.data.data() + static_cast<std::size_t>(row) * c.width;
        std::copy(src, src + d.cols, out.data.data() + static_cast<std::size_t>(row) * d.cols);
    }
    return out;
}

} // namespace medimark
