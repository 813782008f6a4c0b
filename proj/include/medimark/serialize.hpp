#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "medimark/bitplane.hpp"
#include "medimark/metrics.hpp"
#include "medimark/tamper.hpp"
#include "medimark/verify.hpp"

namespace medimark {

// JSON has no infinity, so psnr_db serializes as the string "inf" when
// the images are identical. The schema is documented in the README and
// treated as stable.
inline nlohmann::json to_json(const QualityReport& q) {
    nlohmann::json j{
        {"mse", q.mse},
        {"mae", q.mae},
        {"ssim", q.ssim},
        {"uiqi", q.uiqi},
        {"entropy_bits", q.entropy_bits},
    };
    if (std::isinf(q.psnr_db))
        j["psnr_db"] = "inf";
    else
        j["psnr_db"] = q.psnr_db;
    return j;
}

inline nlohmann::json to_json(const BoundingBox& b) {
    return {{"row_min", b.row_min}, {"col_min", b.col_min}, {"row_max", b.row_max},
            {"col_max", b.col_max}};
}

// Summary only; the per-pixel map is exported as an image, not JSON.
inline nlohmann::json to_json(const MismatchReport& r) {
    nlohmann::json boxes = nlohmann::json::array();
    for (const auto& b : r.bounding_boxes)
        boxes.push_back(to_json(b));
    return {{"tampered", r.tampered},
            {"mismatch_count", r.mismatch_count},
            {"total_pixels", r.total_pixels},
            {"mismatch_fraction", r.mismatch_fraction()},
            {"bounding_boxes", boxes}};
}

inline nlohmann::json to_json(const TamperSpec& s) {
    nlohmann::json j{
        {"kind", s.kind == TamperKind::constant_overwrite ? "constant_overwrite"
                                                          : "cross_channel_copy"},
        {"target", std::string(to_string(s.target))},
        {"region",
         {{"row", s.region.row}, {"col", s.region.col}, {"rows", s.region.rows},
          {"cols", s.region.cols}}},
    };
    if (s.kind == TamperKind::cross_channel_copy)
        j["source"] = std::string(to_string(s.source));
    else
        j["value"] = s.value;
    return j;
}

inline nlohmann::json to_json(const FdrResult& f) {
    return {{"correlation", f.correlation},
            {"detected", f.detected},
            {"tampered_block_ratio", f.tampered_block_ratio},
            {"tampered_block_percent", f.tampered_block_ratio * 100.0}};
}

namespace detail {

inline std::string format_value(double v) {
    if (std::isinf(v))
        return "inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    return buf;
}

} // namespace detail

// Aligned name/value table for terminal output.
inline std::string render_table(const QualityReport& q) {
    std::string out;
    const std::pair<const char*, double> rows[] = {
        {"mae", q.mae},         {"mse", q.mse},
        {"ssim", q.ssim},       {"uiqi", q.uiqi},
        {"psnr_db", q.psnr_db}, {"entropy_bits", q.entropy_bits},
    };
    for (const auto& [name, value] : rows) {
        char line[96];
        std::snprintf(line, sizeof(line), "%-14s %s\n", name, detail::format_value(value).c_str());
        out += line;
    }
    return out;
}

} // namespace medimark
