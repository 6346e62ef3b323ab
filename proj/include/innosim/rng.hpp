#ifndef INNOSIM_RNG_HPP
#define INNOSIM_RNG_HPP

#include <cstdint>
#include <random>

namespace innosim {

using Rng = std::mt19937_64;

// Uniform double in [0,1) built from the top 53 bits of one generator draw.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_real(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// Uniform integer in [0, n), unbiased (rejection on the top range).
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

inline bool bernoulli(Rng& rng, double p) {
    return uniform01(rng) < p;
}

// splitmix64 finalizer; full-avalanche 64-bit mix.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Seed for replication `index` of a base seed: independent streams per
// replication, reproducible from (base, index) alone.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    return mix64(base ^ mix64(index + 1));
}

// Map a unit-interval design coordinate to a 64-bit run seed.
inline std::uint64_t unit_to_seed(double u) {
    auto raw = static_cast<std::uint64_t>(u * 9007199254740992.0);  // 2^53
    return mix64(raw);
}

}  // namespace innosim

#endif
