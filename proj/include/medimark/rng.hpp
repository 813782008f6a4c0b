#pragma once

#include <cstdint>

namespace medimark {

// splitmix64 (Steele, Lea, Flood). Chosen over std::mt19937 for the
// experiment harness because its output is bit-identical on every
// platform and the state is a single word.
struct SplitMix64 {
    std::uint64_t state = 0;

    constexpr explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n). Multiply-shift keeps the draw exact and portable.
    constexpr std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    constexpr std::uint8_t byte() { return static_cast<std::uint8_t>(next() >> 56); }

    // Uniform double in [0, 1).
    constexpr double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

} // namespace medimark
