#pragma once

#include <cstdint>
#include <string>

namespace modlie {

// Deterministic 64-bit generator (splitmix64).  All randomized routines in
// the library take an explicit seed so runs are reproducible bit-for-bit;
// there is no global generator state anywhere.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n == 0 yields 0.
    std::uint64_t next_below(std::uint64_t n) {
        if (n == 0) return 0;
        // Rejection sampling keeps the distribution exactly uniform.
        std::uint64_t limit = ~0ull - (~0ull % n + 1) % n;
        std::uint64_t v;
        do { v = next(); } while (v > limit);
        return v % n;
    }
};

// Stable sub-seed derivation: hash the tag (FNV-1a) into the parent seed so
// independent pipeline stages draw from decoupled streams.
inline std::uint64_t derive_seed(std::uint64_t seed, const std::string& tag) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : tag) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    SplitMix64 g(seed ^ h);
    return g.next();
}

}  // namespace modlie
