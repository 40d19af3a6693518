#pragma once

#include <cstdint>

namespace gupnl {

// Counter-based deterministic generator: SplitMix64 finalizer applied to
// seed + (ordinal + 1) * golden-ratio increment. Each output depends only on
// (seed, ordinal), so any partitioning of the ordinal range reproduces the
// serial stream exactly.
inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t ordinal) {
    std::uint64_t z = seed + (ordinal + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::uint64_t seed, std::uint64_t ordinal) {
    return static_cast<double>(counter_hash(seed, ordinal) >> 11) * 0x1.0p-53;
}

}  // namespace gupnl
