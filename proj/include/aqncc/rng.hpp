#pragma once

#include <bit>
#include <cstdint>
#include <random>

namespace aqncc {

/// splitmix64 avalanche step; the backbone of all derived seeding.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic seed derivation: mixes the master seed with stream tags so
/// that trials are order- and parallelism-independent.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t h = splitmix64(master);
    h = splitmix64(h ^ a);
    h = splitmix64(h ^ b);
    h = splitmix64(h ^ c);
    return h;
}

inline std::uint64_t hash_double(double x) {
    return std::bit_cast<std::uint64_t>(x);
}

/// Uniform double in [0,1) with 53 random bits; avoids the
/// implementation-defined behavior of std::generate_canonical.
inline double uniform_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(std::mt19937_64& rng, double p) {
    return uniform_double(rng) < p;
}

} // namespace aqncc
