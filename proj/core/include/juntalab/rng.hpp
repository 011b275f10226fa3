#pragma once

#include <cstdint>
#include <cmath>

namespace juntalab {

// Counter-based random numbers (splitmix64 finalizer over seed + index).
// Every draw is addressable by (seed, index), so parallel or re-ordered
// evaluation cannot change a sampled value and runs are bit-reproducible
// across platforms.

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rand_at(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

/// Uniform draw in [0,1), indexed.
inline double uniform01(std::uint64_t seed, std::uint64_t index) {
    return static_cast<double>(rand_at(seed, index) >> 11) * 0x1.0p-53;
}

/// Uniform draw in (0,1], indexed (safe for log()).
inline double uniform01_open(std::uint64_t seed, std::uint64_t index) {
    return (static_cast<double>(rand_at(seed, index) >> 11) + 1.0) * 0x1.0p-53;
}

/// Standard normal via Box-Muller; consumes counter slots 2i and 2i+1.
inline double normal01(std::uint64_t seed, std::uint64_t index) {
    const double u1 = uniform01_open(seed, 2 * index);
    const double u2 = uniform01(seed, 2 * index + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

/// Derives an independent stream seed (for sub-tasks of a seeded run).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return mix64(seed ^ (0xD1B54A32D192ED03ULL + stream * 0x8CB92BA72F3D8DD7ULL));
}

/// Uniform integer in [0, n), indexed. n must be > 0.
inline std::uint64_t uniform_below(std::uint64_t seed, std::uint64_t index, std::uint64_t n) {
    // 128-bit multiply trick; bias is negligible for n << 2^64.
    unsigned __int128 m = static_cast<unsigned __int128>(rand_at(seed, index)) * n;
    return static_cast<std::uint64_t>(m >> 64);
}

}  // namespace juntalab
