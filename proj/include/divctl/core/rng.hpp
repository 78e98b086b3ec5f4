#pragma once

#include <cmath>
#include <cstdint>

namespace divctl::rng {

// Counter-based generator: every draw is a pure function of (key, counter),
// so parallel or out-of-order evaluation yields identical streams.

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Independent stream key for (seed, stream_id), e.g. one stream per frame.
constexpr std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream_id) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream_id * 0xD1342543DE82EF95ULL + 0x63652362ULL));
}

// Uniform draw in (0, 1); never returns 0 or 1.
inline double uniform01(std::uint64_t key, std::uint64_t counter) {
    const std::uint64_t x = splitmix64(key + counter * 0x9E3779B97F4A7C15ULL);
    return (static_cast<double>(x >> 11) + 0.5) * 0x1p-53;
}

// Standard normal via Box-Muller on two counter-derived uniforms.
inline double normal(std::uint64_t key, std::uint64_t counter) {
    const double u1 = uniform01(key, 2 * counter);
    const double u2 = uniform01(key, 2 * counter + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

}  // namespace divctl::rng
