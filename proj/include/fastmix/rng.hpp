#pragma once

#include <cstdint>
#include <random>

namespace fastmix {

// All randomized code takes an explicit 64-bit seed and derives its stream
// locally; nothing reads global RNG state.
using Rng = std::mt19937_64;

inline double uniform01(Rng& rng) {
    return (rng() >> 11) * 0x1.0p-53;
}

// Uniform in {lo, ..., hi} inclusive.
inline int uniform_int(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline double standard_normal(Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    return normal(rng);
}

}  // namespace fastmix
