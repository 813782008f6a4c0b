#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "medimark/errors.hpp"

namespace medimark {

namespace aes_detail {

// FIPS-197 S-box.
inline constexpr std::array<std::uint8_t, 256> sbox = {
    0x63, 0x7c, 0x77, 0x7b, 0xf2, 0x6b, 0x6f, 0xc5, 0x30, 0x01, 0x67, 0x2b,
    0xfe, 0xd7, 0xab, 0x76, 0xca, 0x82, 0xc9, 0x7d, 0xfa, 0x59, 0x47, 0xf0,
    0xad, 0xd4, 0xa2, 0xaf, 0x9c, 0xa4, 0x72, 0xc0, 0xb7, 0xfd, 0x93, 0x26,
    0x36, 0x3f, 0xf7, 0xcc, 0x34, 0xa5, 0xe5, 0xf1, 0x71, 0xd8, 0x31, 0x15,
    0x04, 0xc7, 0x23, 0xc3, 0x18, 0x96, 0x05, 0x9a, 0x07, 0x12, 0x80, 0xe2,
    0xeb, 0x27, 0xb2, 0x75, 0x09, 0x83, 0x2c, 0x1a, 0x1b, 0x6e, 0x5a, 0xa0,
    0x52, 0x3b, 0xd6, 0xb3, 0x29, 0xe3, 0x2f, 0x84, 0x53, 0xd1, 0x00, 0xed,
    0x20, 0xfc, 0xb1, 0x5b, 0x6a, 0xcb, 0xbe, 0x39, 0x4a, 0x4c, 0x58, 0xcf,
    0xd0, 0xef, 0xaa, 0xfb, 0x43, 0x4d, 0x33, 0x85, 0x45, 0xf9, 0x02, 0x7f,
    0x50, 0x3c, 0x9f, 0xa8, 0x51, 0xa3, 0x40, 0x8f, 0x92, 0x9d, 0x38, 0xf5,
    0xbc, 0xb6, 0xda, 0x21, 0x10, 0xff, 0xf3, 0xd2, 0xcd, 0x0c, 0x13, 0xec,
    0x5f, 0x97, 0x44, 0x17, 0xc4, 0xa7, 0x7e, 0x3d, 0x64, 0x5d, 0x19, 0x73,
    0x60, 0x81, 0x4f, 0xdc, 0x22, 0x2a, 0x90, 0x88, 0x46, 0xee, 0xb8, 0x14,
    0xde, 0x5e, 0x0b, 0xdb, 0xe0, 0x32, 0x3a, 0x0a, 0x49, 0x06, 0x24, 0x5c,
    0xc2, 0xd3, 0xac, 0x62, 0x91, 0x95, 0xe4, 0x79, 0xe7, 0xc8, 0x37, 0x6d,
    0x8d, 0xd5, 0x4e, 0xa9, 0x6c, 0x56, 0xf4, 0xea, 0x65, 0x7a, 0xae, 0x08,
    0xba, 0x78, 0x25, 0x2e, 0x1c, 0xa6, 0xb4, 0xc6, 0xe8, 0xdd, 0x74, 0x1f,
    0x4b, 0xbd, 0x8b, 0x8a, 0x70, 0x3e, 0xb5, 0x66, 0x48, 0x03, 0xf6, 0x0e,
    0x61, 0x35, 0x57, 0xb9, 0x86, 0xc1, 0x1d, 0x9e, 0xe1, 0xf8, 0x98, 0x11,
    0x69, 0xd9, 0x8e, 0x94, 0x9b, 0x1e, 0x87, 0xe9, 0xce, 0x55, 0x28, 0xdf,
    0x8c, 0xa1, 0x89, 0x0d, 0xbf, 0xe6, 0x42, 0x68, 0x41, 0x99, 0x2d, 0x0f,
    0xb0, 0x54, 0xbb, 0x16};

constexpr std::uint8_t xtime(std::uint8_t a) {
    return static_cast<std::uint8_t>((a << 1) ^ ((a >> 7) * 0x1B));
}

// Encryption T-tables: table r maps an input byte to the S-boxed,
// MixColumns-weighted contribution of state row r to one output column.
constexpr std::array<std::array<std::uint32_t, 256>, 4> make_enc_tables() {
    std::array<std::array<std::uint32_t, 256>, 4> t{};
    for (int i = 0; i < 256; ++i) {
        const std::uint32_t s = sbox[static_cast<std::size_t>(i)];
        const std::uint32_t s2 = xtime(static_cast<std::uint8_t>(s));
        const std::uint32_t s3 = s2 ^ s;
        t[0][static_cast<std::size_t>(i)] = (s2 << 24) | (s << 16) | (s << 8) | s3;
        t[1][static_cast<std::size_t>(i)] = (s3 << 24) | (s2 << 16) | (s << 8) | s;
        t[2][static_cast<std::size_t>(i)] = (s << 24) | (s3 << 16) | (s2 << 8) | s;
        t[3][static_cast<std::size_t>(i)] = (s << 24) | (s << 16) | (s3 << 8) | s2;
    }
    return t;
}

inline constexpr auto enc_tables = make_enc_tables();

inline constexpr std::array<std::uint8_t, 10> rcon = {0x01, 0x02, 0x04, 0x08, 0x10,
                                                      0x20, 0x40, 0x80, 0x1B, 0x36};

} // namespace aes_detail

// AES-128 block encryption (FIPS-197): 10 rounds, 44-word key schedule.
// Decryption is deliberately absent; the scheme only ever re-encrypts.
class Aes128 {
public:
    static constexpr std::size_t block_size = 16;
    static constexpr std::size_t key_size = 16;
    using Block = std::array<std::uint8_t, block_size>;
    using Key = std::array<std::uint8_t, key_size>;

    explicit Aes128(const Key& key) { expand_key(key.data()); }

    void encrypt_block(const std::uint8_t* in, std::uint8_t* out) const {
        using aes_detail::enc_tables;
        using aes_detail::sbox;

        std::uint32_t w0 = load_be(in + 0) ^ round_keys_[0];
        std::uint32_t w1 = load_be(in + 4) ^ round_keys_[1];
        std::uint32_t w2 = load_be(in + 8) ^ round_keys_[2];
        std::uint32_t w3 = load_be(in + 12) ^ round_keys_[3];

        for (int round = 1; round < 10; ++round) {
            const std::uint32_t* rk = &round_keys_[static_cast<std::size_t>(round) * 4];
            const std::uint32_t t0 = enc_tables[0][w0 >> 24] ^ enc_tables[1][(w1 >> 16) & 0xFF] ^
                                     enc_tables[2][(w2 >> 8) & 0xFF] ^ enc_tables[3][w3 & 0xFF] ^ rk[0];
            const std::uint32_t t1 = enc_tables[0][w1 >> 24] ^ enc_tables[1][(w2 >> 16) & 0xFF] ^
                                     enc_tables[2][(w3 >> 8) & 0xFF] ^ enc_tables[3][w0 & 0xFF] ^ rk[1];
            const std::uint32_t t2 = enc_tables[0][w2 >> 24] ^ enc_tables[1][(w3 >> 16) & 0xFF] ^
                                     enc_tables[2][(w0 >> 8) & 0xFF] ^ enc_tables[3][w1 & 0xFF] ^ rk[2];
            const std::uint32_t t3 = enc_tables[0][w3 >> 24] ^ enc_tables[1][(w0 >> 16) & 0xFF] ^
                                     enc_tables[2][(w1 >> 8) & 0xFF] ^ enc_tables[3][w2 & 0xFF] ^ rk[3];
            w0 = t0;
            w1 = t1;
            w2 = t2;
            w3 = t3;
        }

        // Final round: SubBytes + ShiftRows + AddRoundKey, no MixColumns.
        const std::uint32_t* rk = &round_keys_[40];
        const std::uint32_t o0 = (std::uint32_t{sbox[w0 >> 24]} << 24) |
                                 (std::uint32_t{sbox[(w1 >> 16) & 0xFF]} << 16) |
                                 (std::uint32_t{sbox[(w2 >> 8) & 0xFF]} << 8) |
                                 std::uint32_t{sbox[w3 & 0xFF]};
        const std::uint32_t o1 = (std::uint32_t{sbox[w1 >> 24]} << 24) |
                                 (std::uint32_t{sbox[(w2 >> 16) & 0xFF]} << 16) |
                                 (std::uint32_t{sbox[(w3 >> 8) & 0xFF]} << 8) |
                                 std::uint32_t{sbox[w0 & 0xFF]};
        const std::uint32_t o2 = (std::uint32_t{sbox[w2 >> 24]} << 24) |
                                 (std::uint32_t{sbox[(w3 >> 16) & 0xFF]} << 16) |
                                 (std::uint32_t{sbox[(w0 >> 8) & 0xFF]} << 8) |
                                 std::uint32_t{sbox[w1 & 0xFF]};
        const std::uint32_t o3 = (std::uint32_t{sbox[w3 >> 24]} << 24) |
                                 (std::uint32_t{sbox[(w0 >> 16) & 0xFF]} << 16) |
                                 (std::uint32_t{sbox[(w1 >> 8) & 0xFF]} << 8) |
                                 std::uint32_t{sbox[w2 & 0xFF]};
        store_be(out + 0, o0 ^ rk[0]);
        store_be(out + 4, o1 ^ rk[1]);
        store_be(out + 8, o2 ^ rk[2]);
        store_be(out + 12, o3 ^ rk[3]);
    }

    Block encrypt_block(const Block& in) const {
        Block out;
        encrypt_block(in.data(), out.data());
        return out;
    }

private:
    static std::uint32_t load_be(const std::uint8_t* p) {
        return (std::uint32_t{p[0]} << 24) | (std::uint32_t{p[1]} << 16) |
               (std::uint32_t{p[2]} << 8) | std::uint32_t{p[3]};
    }
    static void store_be(std::uint8_t* p, std::uint32_t w) {
        p[0] = static_cast<std::uint8_t>(w >> 24);
        p[1] = static_cast<std::uint8_t>(w >> 16);
        p[2] = static_cast<std::uint8_t>(w >> 8);
        p[3] = static_cast<std::uint8_t>(w);
    }
    static std::uint32_t sub_word(std::uint32_t w) {
        using aes_detail::sbox;
        return (std::uint32_t{sbox[w >> 24]} << 24) | (std::uint32_t{sbox[(w >> 16) & 0xFF]} << 16) |
               (std::uint32_t{sbox[(w >> 8) & 0xFF]} << 8) | std::uint32_t{sbox[w & 0xFF]};
    }
    static std::uint32_t rot_word(std::uint32_t w) { return (w << 8) | (w >> 24); }

    void expand_key(const std::uint8_t* key) {
        for (int i = 0; i < 4; ++i)
            round_keys_[static_cast<std::size_t>(i)] = load_be(key + i * 4);
        for (int i = 4; i < 44; ++i) {
            std::uint32_t t = round_keys_[static_cast<std::size_t>(i) - 1];
            if (i % 4 == 0)
                t = sub_word(rot_word(t)) ^ (std::uint32_t{aes_detail::rcon[static_cast<std::size_t>(i / 4) - 1]} << 24);
            round_keys_[static_cast<std::size_t>(i)] = round_keys_[static_cast<std::size_t>(i) - 4] ^ t;
        }
    }

    std::array<std::uint32_t, 44> round_keys_;
};

// Span-based convenience used by callers that hold raw buffers.
inline std::array<std::uint8_t, 16> aes128_encrypt_block(std::span<const std::uint8_t> key,
                                                         std::span<const std::uint8_t> block) {
    if (key.size() != Aes128::key_size)
        throw SizeError("AES-128 key must be exactly 16 bytes");
    if (block.size() != Aes128::block_size)
        throw SizeError("AES-128 block must be exactly 16 bytes");
    Aes128::Key k;
    std::copy(key.begin(), key.end(), k.begin());
    Aes128 cipher(k);
    std::array<std::uint8_t, 16> out;
    cipher.encrypt_block(block.data(), out.data());
    return out;
}

} // namespace medimark
