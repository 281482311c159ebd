#pragma once

#include <cstdint>
#include <random>

namespace maco {

// splitmix64 step; used to whiten seed material before feeding mt19937_64.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Independent generator for one (seed, a, b) triple. Streams derived this way
// never share state, so ants can run in any order or thread count and still
// draw identical values.
inline std::mt19937_64 derive_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = seed;
    std::uint64_t x = splitmix64(s);
    s ^= a * 0x9e3779b97f4a7c15ULL;
    std::uint64_t y = splitmix64(s);
    s ^= b * 0xc2b2ae3d27d4eb4fULL;
    std::uint64_t z = splitmix64(s);
    return std::mt19937_64{x ^ (y << 1) ^ (z << 2)};
}

// Unbiased draw from [0, n) via rejection; avoids the implementation-defined
// behavior of std::uniform_int_distribution so outputs are reproducible
// across standard libraries.
inline std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

}  // namespace maco
