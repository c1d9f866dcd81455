#pragma once

// Seedable, splittable pseudo-random source for the Monte Carlo estimators.
// SplitMix64 (Steele, Lea & Flood): tiny state, high quality for sampling
// workloads, and substreams derive deterministically from (seed, worker),
// which is what makes parallel runs bit-reproducible.

#include <cstdint>

namespace liqdem {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static constexpr const char* name() { return "splitmix64"; }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform draw from [0, bound) via rejection; no modulo bias.
    std::uint64_t bounded(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Independent substream for a worker index under a common seed.
    static SplitMix64 substream(std::uint64_t seed, std::uint64_t worker) {
        SplitMix64 mixer(seed ^ (0x5851f42d4c957f2dull * (worker + 1)));
        return SplitMix64(mixer.next());
    }

private:
    std::uint64_t state_;
};

} // namespace liqdem
