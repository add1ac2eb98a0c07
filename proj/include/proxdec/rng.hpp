#pragma once

#include <cstdint>
#include <random>

namespace proxdec {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// One independent substream per (master seed, SNR point, frame) triple, so
/// counters do not depend on worker count or scheduling order.
inline std::mt19937_64 frame_rng(std::uint64_t master_seed, std::uint64_t point_index,
                                 std::uint64_t frame_index) {
    const std::uint64_t s =
        splitmix64(splitmix64(master_seed ^ splitmix64(point_index)) ^ splitmix64(frame_index));
    return std::mt19937_64(s);
}

}  // namespace proxdec
