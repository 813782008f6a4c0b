#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>

namespace medimark {

// SHA-1 (FIPS 180-1): 512-bit blocks, 80 rounds, big-endian length padding.
class Sha1 {
public:
    static constexpr std::size_t digest_size = 20;
    using Digest = std::array<std::uint8_t, digest_size>;

    Sha1() { reset(); }

    void reset() {
        state_ = {0x67452301u, 0xEFCDAB89u, 0x98BADCFEu, 0x10325476u, 0xC3D2E1F0u};
        total_bytes_ = 0;
        buffered_ = 0;
    }

    void update(std::span<const std::uint8_t> data) {
        total_bytes_ += data.size();
        std::size_t offset = 0;
        if (buffered_ > 0) {
            const std::size_t take = std::min(data.size(), std::size_t{64} - buffered_);
            std::memcpy(buffer_.data() + buffered_, data.data(), take);
            buffered_ += take;
            offset = take;
            if (buffered_ == 64) {
                process_block(buffer_.data());
                buffered_ = 0;
            }
        }
        while (offset + 64 <= data.size()) {
            process_block(data.data() + offset);
            offset += 64;
        }
        if (offset < data.size()) {
            std::memcpy(buffer_.data(), data.data() + offset, data.size() - offset);
            buffered_ = data.size() - offset;
        }
    }

    Digest finish() {
        const std::uint64_t bit_length = total_bytes_ * 8;
        const std::uint8_t one_bit = 0x80;
        update(std::span(&one_bit, 1));
        const std::uint8_t zero = 0x00;
        while (buffered_ != 56)
            update(std::span(&zero, 1));
        std::array<std::uint8_t, 8> length_be;
        for (int i = 0; i < 8; ++i)
            length_be[i] = static_cast<std::uint8_t>(bit_length >> (56 - 8 * i));
        update(length_be);

        Digest digest;
        for (int i = 0; i < 5; ++i) {
            digest[i * 4 + 0] = static_cast<std::uint8_t>(state_[i] >> 24);
            digest[i * 4 + 1] = static_cast<std::uint8_t>(state_[i] >> 16);
            digest[i * 4 + 2] = static_cast<std::uint8_t>(state_[i] >> 8);
            digest[i * 4 + 3] = static_cast<std::uint8_t>(state_[i]);
        }
        reset();
        return digest;
    }

private:
    static constexpr std::uint32_t rotl(std::uint32_t x, int n) {
        return (x << n) | (x >> (32 - n));
    }

    void process_block(const std::uint8_t* block) {
        std::uint32_t w[80];
        for (int t = 0; t < 16; ++t) {
            w[t] = (std::uint32_t{block[t * 4 + 0]} << 24) |
                   (std::uint32_t{block[t * 4 + 1]} << 16) |
                   (std::uint32_t{block[t * 4 + 2]} << 8) |
                   std::uint32_t{block[t * 4 + 3]};
        }
        for (int t = 16; t < 80; ++t)
            w[t] = rotl(w[t - 3] ^ w[t - 8] ^ w[t - 14] ^ w[t - 16], 1);

        std::uint32_t a = state_[0], b = state_[1], c = state_[2];
        std::uint32_t d = state_[3], e = state_[4];
        for (int t = 0; t < 80; ++t) {
            std::uint32_t f, k;
            if (t < 20) {
                f = (b & c) | (~b & d);
                k = 0x5A827999u;
            } else if (t < 40) {
                f = b ^ c ^ d;
                k = 0x6ED9EBA1u;
            } else if (t < 60) {
                f = (b & c) | (b & d) | (c & d);
                k = 0x8F1BBCDCu;
            } else {
                f = b ^ c ^ d;
                k = 0xCA62C1D6u;
            }
            const std::uint32_t temp = rotl(a, 5) + f + e + k + w[t];
            e = d;
            d = c;
            c = rotl(b, 30);
            b = a;
            a = temp;
        }
        state_[0] += a;
        state_[1] += b;
        state_[2] += c;
        state_[3] += d;
        state_[4] += e;
    }

    std::array<std::uint32_t, 5> state_;
    std::array<std::uint8_t, 64> buffer_;
    std::uint64_t total_bytes_ = 0;
    std::size_t buffered_ = 0;
};

inline Sha1::Digest sha1(std::span<const std::uint8_t> data) {
    Sha1 ctx;
    ctx.update(data);
    return ctx.finish();
}

inline std::string to_hex_upper(std::span<const std::uint8_t> bytes) {
    static constexpr char alphabet[] = "0123456789ABCDEF";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(alphabet[b >> 4]);
        out.push_back(alphabet[b & 0x0F]);
    }
    return out;
}

} // namespace medimark
