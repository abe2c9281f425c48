#pragma once

#include <cstdint>
#include <random>

namespace banditdp {

/// Seeded random source owned by a single run.
///
/// Wraps std::mt19937_64 (whose output sequence is fixed by the standard) and does its own
/// conversion to doubles and bounded integers, so a seed produces the same draws with any
/// standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// True with probability p.
    bool bernoulli(double p) { return uniform() < p; }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        // rejection sampling on the top of the range
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed of repetition `repetition` under `master_seed`.
/// Every grid cell uses the same per-repetition seeds (common random numbers across cells).
constexpr std::uint64_t derive_run_seed(std::uint64_t master_seed, std::uint64_t repetition) {
    return splitmix64(splitmix64(master_seed) ^ (repetition + 1) * 0xd1b54a32d192ed03ULL);
}

}  // namespace banditdp
