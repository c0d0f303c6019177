#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace lvmb {

// Uniform integer in [0, range) from a mt19937_64 stream. Rejection
// sampling: accept 64-bit words below the largest multiple of range, then
// reduce. This keeps the mapping exactly reproducible everywhere, which
// std::uniform_int_distribution does not guarantee across implementations.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t range) {
    if (range == 0) throw std::invalid_argument("draw_below with empty range");
    const std::uint64_t limit = UINT64_MAX / range * range;
    for (;;) {
        std::uint64_t v = rng();
        if (v < limit) return v % range;
    }
}

// Uniform integer in [lo, hi], both ends included.
inline long draw_in_range(std::mt19937_64& rng, long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("draw_in_range with lo > hi");
    return lo + static_cast<long>(
                    draw_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

}  // namespace lvmb
