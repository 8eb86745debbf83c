#pragma once

#include <cstdint>

#include "fppsim/lattice.hpp"

namespace fppsim {

// splitmix64 finalizer; full-avalanche 64-bit mixer.
inline std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

// Stream key for one (master_seed, sample_index) draw.  Per-site bits are a
// pure function of (key, u, v), so sampling order and thread layout can
// never change a configuration.
inline std::uint64_t stream_key(std::uint64_t master_seed, std::int64_t sample_index) {
    return mix64(master_seed + 0x9e3779b97f4a7c15ULL * (std::uint64_t(sample_index) + 1));
}

inline int site_bit(std::uint64_t key, Site s) {
    const std::uint64_t uv =
        (std::uint64_t(std::uint32_t(s.u)) << 32) | std::uint64_t(std::uint32_t(s.v));
    return int(mix64(key ^ uv) & 1u);
}

}  // namespace fppsim
