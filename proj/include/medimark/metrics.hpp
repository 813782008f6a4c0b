#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>

#include "medimark/errors.hpp"
#include "medimark/image.hpp"

namespace medimark {

// Distortion and quality measures between a reference image and a
// processed image. All statistics are global over the three channels
// jointly; entropy_bits describes the processed image alone.
struct QualityReport {
    double mse = 0.0;
    double mae = 0.0;
    double ssim = 0.0;
    double uiqi = 0.0;
    double psnr_db = 0.0;  // +infinity when mse == 0
    double entropy_bits = 0.0;
};

namespace metrics_detail {

struct PairSums {
    std::int64_t n = 0;
    std::int64_t sum_x = 0, sum_v = 0;
    std::int64_t sum_xx = 0, sum_vv = 0, sum_xv = 0;
    std::int64_t sum_abs_diff = 0;
    std::int64_t sum_sq_diff = 0;
};

inline PairSums accumulate(const RgbImage& x, const RgbImage& v) {
    detail::require_valid(x);
    detail::require_valid(v);
    if (x.width != v.width || x.height != v.height)
        throw DimensionMismatch("metrics require identical dimensions");
    PairSums s;
    const std::size_t n = x.sample_count();
    s.n = static_cast<std::int64_t>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t a = x.data[i];
        const std::int64_t b = v.data[i];
        s.sum_x += a;
        s.sum_v += b;
        s.sum_xx += a * a;
        s.sum_vv += b * b;
        s.sum_xv += a * b;
        const std::int64_t d = a - b;
        s.sum_abs_diff += d < 0 ? -d : d;
        s.sum_sq_diff += d * d;
    }
    return s;
}

struct Moments {
    double mean_x, mean_v;
    double var_x, var_v, cov;  // population (divide by n)
};

inline Moments moments(const PairSums& s) {
    const double n = static_cast<double>(s.n);
    Moments m{};
    m.mean_x = static_cast<double>(s.sum_x) / n;
    m.mean_v = static_cast<double>(s.sum_v) / n;
    m.var_x = static_cast<double>(s.sum_xx) / n - m.mean_x * m.mean_x;
    m.var_v = static_cast<double>(s.sum_vv) / n - m.mean_v * m.mean_v;
    m.cov = static_cast<double>(s.sum_xv) / n - m.mean_x * m.mean_v;
    return m;
}

inline constexpr double ssim_c1 = (0.01 * 255.0) * (0.01 * 255.0);
inline constexpr double ssim_c2 = (0.03 * 255.0) * (0.03 * 255.0);

} // namespace metrics_detail

inline double mse(const RgbImage& x, const RgbImage& v) {
    const auto s = metrics_detail::accumulate(x, v);
    return static_cast<double>(s.sum_sq_diff) / static_cast<double>(s.n);
}

inline double mae(const RgbImage& x, const RgbImage& v) {
    const auto s = metrics_detail::accumulate(x, v);
    return static_cast<double>(s.sum_abs_diff) / static_cast<double>(s.n);
}

// Single global SSIM window with the conventional stabilizers
// c1 = (0.01 * 255)^2, c2 = (0.03 * 255)^2.
inline double ssim(const RgbImage& x, const RgbImage& v) {
    using namespace metrics_detail;
    const auto m = moments(accumulate(x, v));
    const double num = (2.0 * m.mean_x * m.mean_v + ssim_c1) * (2.0 * m.cov + ssim_c2);
    const double den = (m.mean_x * m.mean_x + m.mean_v * m.mean_v + ssim_c1) *
                       (m.var_x + m.var_v + ssim_c2);
    return num / den;
}

// Universal image quality index: correlation x luminance x contrast,
// with no stabilizing constants, so degenerate inputs are an error.
inline double uiqi(const RgbImage& x, const RgbImage& v) {
    using namespace metrics_detail;
    const auto m = moments(accumulate(x, v));
    if (m.var_x <= 0.0 || m.var_v <= 0.0)
        throw DegenerateInput("UIQI undefined when either image has zero variance");
    const double mean_sq = m.mean_x * m.mean_x + m.mean_v * m.mean_v;
    if (mean_sq == 0.0)
        throw DegenerateInput("UIQI undefined when both images have zero mean");
    const double sd_x = std::sqrt(m.var_x);
    const double sd_v = std::sqrt(m.var_v);
    const double correlation = m.cov / (sd_x * sd_v);
    const double luminance = 2.0 * m.mean_x * m.mean_v / mean_sq;
    const double contrast = 2.0 * sd_x * sd_v / (m.var_x + m.var_v);
    return correlation * luminance * contrast;
}

inline double psnr(const RgbImage& x, const RgbImage& v) {
    const double err = mse(x, v);
    if (err == 0.0)
        return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / err);
}

// Shannon entropy of the 256-bin histogram over all samples.
inline double entropy(const RgbImage& x) {
    detail::require_valid(x);
    std::array<std::int64_t, 256> hist{};
    for (std::uint8_t s : x.data)
        ++hist[s];
    const double n = static_cast<double>(x.sample_count());
    double bits = 0.0;
    for (std::int64_t count : hist) {
        if (count == 0)
            continue;
        const double p = static_cast<double>(count) / n;
        bits -= p * std::log2(p);
    }
    return bits;
}

inline QualityReport quality_report(const RgbImage& reference, const RgbImage& processed) {
    QualityReport report;
    report.mse = mse(reference, processed);
    report.mae = mae(reference, processed);
    report.ssim = ssim(reference, processed);
    report.uiqi = uiqi(reference, processed);
    report.psnr_db = psnr(reference, processed);
    report.entropy_bits = entropy(processed);
    return report;
}

} // namespace medimark
