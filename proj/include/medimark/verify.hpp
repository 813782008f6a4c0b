#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "medimark/bitplane.hpp"
#include "medimark/crypto.hpp"
#include "medimark/embed.hpp"
#include "medimark/image.hpp"

namespace medimark {

// Per-pixel boolean matrix, row-major. Cells are stored as bytes.
struct BoolMatrix {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> cells;

    BoolMatrix() = default;
    BoolMatrix(int width_, int height_)
        : width(width_), height(height_),
          cells(static_cast<std::size_t>(width_) * height_, 0) {}

    bool at(int row, int col) const {
        return cells[static_cast<std::size_t>(row) * width + col] != 0;
    }
    void set(int row, int col, bool v) {
        cells[static_cast<std::size_t>(row) * width + col] = v ? 1 : 0;
    }
};

// Inclusive pixel bounds of one connected mismatch region.
struct BoundingBox {
    int row_min = 0;
    int col_min = 0;
    int row_max = 0;
    int col_max = 0;

    friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

struct MismatchReport {
    BoolMatrix map;
    std::int64_t mismatch_count = 0;
    std::int64_t total_pixels = 0;
    bool tampered = false;
    std::vector<BoundingBox> bounding_boxes;

    double mismatch_fraction() const {
        return total_pixels == 0 ? 0.0
                                 : static_cast<double>(mismatch_count) / static_cast<double>(total_pixels);
    }
};

struct FdrResult {
    double correlation = 0.0;
    bool detected = false;
    double tampered_block_ratio = 0.0;  // tampered block area / image area
};

// Cell (r, c) = bit `plane` of sample (r, c).
inline BoolMatrix extract_bitplane(const Channel& c, BitPlane plane) {
    detail::require_valid(c);
    const std::uint8_t mask = plane_mask(plane);
    BoolMatrix bits(c.width, c.height);
    const std::size_t n = c.sample_count();
    for (std::size_t i = 0; i < n; ++i)
        bits.cells[i] = (c.data[i] & mask) ? 1 : 0;
    return bits;
}

namespace detail {

// 4-connected component bounding boxes, ordered by first-visited cell
// (row-major), which makes the output deterministic.
inline std::vector<BoundingBox> connected_boxes(const BoolMatrix& map) {
    std::vector<BoundingBox> boxes;
    const int w = map.width;
    const int h = map.height;
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(w) * h, 0);
    std::vector<std::pair<int, int>> stack;
    for (int row = 0; row < h; ++row) {
        for (int col = 0; col < w; ++col) {
            const std::size_t idx = static_cast<std::size_t>(row) * w + col;
            if (!map.cells[idx] || seen[idx])
                continue;
            BoundingBox box{row, col, row, col};
            stack.clear();
            stack.emplace_back(row, col);
            seen[idx] = 1;
            while (!stack.empty()) {
                auto [r, c] = stack.back();
                stack.pop_back();
                box.row_min = std::min(box.row_min, r);
                box.row_max = std::max(box.row_max, r);
                box.col_min = std::min(box.col_min, c);
                box.col_max = std::max(box.col_max, c);
                constexpr int dr[4] = {-1, 1, 0, 0};
                constexpr int dc[4] = {0, 0, -1, 1};
                for (int k = 0; k < 4; ++k) {
                    const int nr = r + dr[k];
                    const int nc = c + dc[k];
                    if (nr < 0 || nr >= h || nc < 0 || nc >= w)
                        continue;
                    const std::size_t nidx = static_cast<std::size_t>(nr) * w + nc;
                    if (map.cells[nidx] && !seen[nidx]) {
                        seen[nidx] = 1;
                        stack.emplace_back(nr, nc);
                    }
                }
            }
            boxes.push_back(box);
        }
    }
    return boxes;
}

} // namespace detail

// Forgery detection: re-derive the key, re-encrypt the received blue
// plane and compare its bit plane against the one embedded in red.
// Any disagreement marks the pixel as tampered. Green is not covered
// by the watermark; a green-only change is invisible here and only an
// original-vs-suspect comparison (fdr_assess) can expose it.
inline MismatchReport verify(const RgbImage& image, const PatientRecord& record, BitPlane plane) {
    auto [red, green, blue] = decompose(image);
    const Dims original = blue.dims();
    const WatermarkKey key = derive_key(record);
    const Channel cipher = crop(encrypt_channel(key, pad_to_multiple_of_8(blue)), original);

    const std::uint8_t mask = plane_mask(plane);
    MismatchReport report;
    report.map = BoolMatrix(image.width, image.height);
    report.total_pixels = static_cast<std::int64_t>(image.pixel_count());
    const std::size_t n = red.sample_count();
    for (std::size_t i = 0; i < n; ++i) {
        if (((red.data[i] ^ cipher.data[i]) & mask) != 0) {
            report.map.cells[i] = 1;
            ++report.mismatch_count;
        }
    }
    report.tampered = report.mismatch_count > 0;
    report.bounding_boxes = detail::connected_boxes(report.map);
    return report;
}

// Pearson correlation over all flattened samples of all three channels.
// Integer moment sums stay exact in int64 up to roughly 4 Mpixel.
inline double pearson_correlation(const RgbImage& a, const RgbImage& b) {
    detail::require_valid(a);
    detail::require_valid(b);
    if (a.width != b.width || a.height != b.height)
        throw DimensionMismatch("correlation requires identical dimensions");
    const std::size_t n = a.sample_count();
    std::int64_t sum_x = 0, sum_y = 0, sum_xx = 0, sum_yy = 0, sum_xy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t x = a.data[i];
        const std::int64_t y = b.data[i];
        sum_x += x;
        sum_y += y;
        sum_xx += x * x;
        sum_yy += y * y;
        sum_xy += x * y;
    }
    const std::int64_t count = static_cast<std::int64_t>(n);
    const std::int64_t var_x_n2 = count * sum_xx - sum_x * sum_x;
    const std::int64_t var_y_n2 = count * sum_yy - sum_y * sum_y;
    if (var_x_n2 == 0 || var_y_n2 == 0)
        throw DegenerateInput("correlation undefined for constant images");
    const double cov = static_cast<double>(count * sum_xy - sum_x * sum_y);
    return cov / (std::sqrt(static_cast<double>(var_x_n2)) * std::sqrt(static_cast<double>(var_y_n2)));
}

// Table-style forgery assessment against a known original: exact
// difference flag plus correlation, with the attack footprint reported
// as block area over image area.
inline FdrResult fdr_assess(const RgbImage& original, const RgbImage& suspect,
                            std::int64_t block_area) {
    FdrResult result;
    result.correlation = pearson_correlation(original, suspect);
    result.detected = original.data != suspect.data;
    result.tampered_block_ratio =
        static_cast<double>(block_area) / static_cast<double>(original.pixel_count());
    return result;
}

// P4 PBM rendering of a mismatch map: mismatch = white, clean = black.
// PBM bit 1 means black, so mismatch cells are stored as 0.
inline std::vector<std::uint8_t> to_pbm(const BoolMatrix& map) {
    std::string header = "P4\n" + std::to_string(map.width) + " " + std::to_string(map.height) + "\n";
    const int row_bytes = (map.width + 7) / 8;
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.resize(header.size() + static_cast<std::size_t>(row_bytes) * map.height, 0);
    std::uint8_t* rows = out.data() + header.size();
    for (int r = 0; r < map.height; ++r) {
        for (int c = 0; c < map.width; ++c) {
            if (!map.at(r, c))
                rows[static_cast<std::size_t>(r) * row_bytes + c / 8] |=
                    static_cast<std::uint8_t>(0x80u >> (c % 8));
        }
    }
    return out;
}

} // namespace medimark
