#pragma once

#include <cstdint>
#include <random>

namespace specnet {

/// Deterministic pseudo-random source used by kmeans seeding, DCBM sampling
/// and eigensolver start vectors.  All draws go through the raw mt19937_64
/// output rather than std:: distributions, whose algorithms differ between
/// standard libraries; identical seeds therefore give identical streams on
/// every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Derives an independent deterministic substream, e.g. one per
    /// kmeans restart or per replicate.
    static Rng derive(std::uint64_t seed, std::uint64_t stream) {
        // splitmix64 scramble of (seed, stream)
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return Rng(z ^ (z >> 31));
    }

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, n), n >= 1, by rejection (unbiased).
    std::uint64_t uniform_int(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 gen_;
};

}  // namespace specnet
