#pragma once

#include <cstdint>

#include "medimark/bitplane.hpp"
#include "medimark/crypto.hpp"
#include "medimark/image.hpp"

namespace medimark {

// Result of embedding. Green and blue are byte-identical to the source;
// each red sample differs from its original by 0 or 2^bit_index(plane).
struct WatermarkedImage {
    RgbImage image;
    BitPlane plane;
};

// Replaces bit `plane` of every red sample with the same bit of the
// corresponding cipher sample; all other bits pass through.
inline Channel substitute_bitplane(const Channel& red, const Channel& cipher, BitPlane plane) {
    detail::require_valid(red);
    detail::require_valid(cipher);
    if (red.dims() != cipher.dims())
        throw DimensionMismatch("red and cipher channels must share dimensions");
    const std::uint8_t mask = plane_mask(plane);
    Channel out = red;
    const std::size_t n = out.sample_count();
    for (std::size_t i = 0; i < n; ++i)
        out.data[i] = static_cast<std::uint8_t>((red.data[i] & ~mask) | (cipher.data[i] & mask));
    return out;
}

// Full embedding pipeline: decompose, pad the blue plane, derive the
// record key, encrypt blue in ECB, crop the cipher back to the input
// size, substitute the chosen bit plane into red, recompose. Output
// dimensions always equal input dimensions.
inline WatermarkedImage embed(const RgbImage& image, const PatientRecord& record, BitPlane plane) {
    auto [red, green, blue] = decompose(image);
    const Dims original = blue.dims();
    const WatermarkKey key = derive_key(record);
    const CipherChannel cipher = encrypt_channel(key, pad_to_multiple_of_8(blue));
    const Channel cipher_cropped = crop(cipher, original);
    Channel new_red = substitute_bitplane(red, cipher_cropped, plane);
    return {compose(new_red, green, blue), plane};
}

} // namespace medimark
