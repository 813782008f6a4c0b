#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "medimark/aes128.hpp"
#include "medimark/errors.hpp"
#include "medimark/image.hpp"
#include "medimark/sha1.hpp"

namespace medimark {

// Opaque byte string identifying the patient/session (ID, name, arrival
// date and so on, concatenated upstream). Sole key material.
struct PatientRecord {
    std::vector<std::uint8_t> bytes;

    static PatientRecord from_string(std::string_view s) {
        return {std::vector<std::uint8_t>(s.begin(), s.end())};
    }

    friend bool operator==(const PatientRecord&, const PatientRecord&) = default;
};

// The watermark key is the first 16 uppercase hex characters of the
// record digest, and those 16 ASCII characters are themselves the
// 128-bit cipher key.
struct WatermarkKey {
    std::string hex_form;                    // matches [0-9A-F]{16}
    std::array<std::uint8_t, 16> key_bytes;  // ASCII bytes of hex_form
};

inline WatermarkKey derive_key(const PatientRecord& record) {
    const Sha1::Digest digest = sha1(record.bytes);
    WatermarkKey key;
    key.hex_form = to_hex_upper(std::span(digest).first(8));
    for (int i = 0; i < 16; ++i)
        key.key_bytes[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>(key.hex_form[static_cast<std::size_t>(i)]);
    return key;
}

// A channel whose samples are AES ciphertext bytes. Same layout as
// Channel; both extents are multiples of 8.
using CipherChannel = Channel;

// ECB over the row-major flattened samples, 16 bytes per block. ECB is
// what makes verification key-only reproducible and confines a
// plaintext change to one ciphertext block.
inline CipherChannel encrypt_channel(const WatermarkKey& key, const Channel& padded) {
    detail::require_valid(padded);
    if (padded.sample_count() % Aes128::block_size != 0)
        throw DimensionMismatch("channel byte count must be divisible by 16; pad first");
    Aes128 cipher(key.key_bytes);
    CipherChannel out(padded.width, padded.height);
    const std::size_t blocks = padded.sample_count() / Aes128::block_size;
    for (std::size_t b = 0; b < blocks; ++b)
        cipher.encrypt_block(padded.data.data() + b * Aes128::block_size,
                             out.data.data() + b * Aes128::block_size);
    return out;
}

} // namespace medimark
