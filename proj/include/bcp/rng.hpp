#pragma once

#include <cstdint>

namespace bcp {

// splitmix64. The constants below are part of the generation contract:
// a seeded run must produce bit-identical instances on every platform.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in (0, 1] with 53-bit resolution.
    double next_unit() { return double((next() >> 11) + 1) * 0x1.0p-53; }
};

// Per-instance seed: three chained splitmix64 steps folding in n and the
// instance index, so any (seed, n, i) triple is reproducible in isolation.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t n, std::uint64_t index) {
    std::uint64_t s = SplitMix64(seed).next() ^ n;
    s = SplitMix64(s).next() ^ index;
    return SplitMix64(s).next();
}

}  // namespace bcp
