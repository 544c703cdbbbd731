#pragma once

#include <cassert>
#include <cstdint>
#include <random>
#include <vector>

namespace hamlab {

// All randomized routines take an Rng seeded by the caller; a fixed seed
// reproduces the exact same stream on any platform (we avoid
// std::uniform_int_distribution, whose output is implementation-defined).
using Rng = std::mt19937_64;

inline std::uint64_t split_mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Stable seed derivation for (master, index) hierarchies: sweep cells,
// trials, restart attempts.  Chained split_mix64 keeps streams decorrelated.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    return split_mix64(a ^ split_mix64(b + 0x9e3779b97f4a7c15ull));
}

// Unbiased integer in [0, bound) via rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    assert(bound > 0);
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

inline int uniform_int_below(Rng& rng, int bound) {
    return static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(bound)));
}

// Fisher-Yates; deterministic for a fixed rng state.
template <typename T>
void shuffle_vec(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = uniform_below(rng, i);
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace hamlab
