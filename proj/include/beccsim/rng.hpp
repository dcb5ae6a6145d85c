#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace beccsim {

/// Deterministic random source used for every stochastic step of a run.
///
/// Engine: std::mt19937_64 seeded with a 64-bit value. The raw output
/// sequence of that engine is fixed by the C++ standard, and all derived
/// draws below are computed from it with explicit arithmetic (no
/// std::*_distribution, whose output is implementation-defined), so a run
/// replays bit-identically on any platform given the same seed.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    /// Uniform double in [0, 1) with 53 random mantissa bits.
    double next_double()
    {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi)
    {
        return lo + (hi - lo) * next_double();
    }

    /// Uniform integer in [0, bound), unbiased via rejection sampling.
    std::uint64_t uniform_int(std::uint64_t bound)
    {
        if (bound == 0) {
            throw std::invalid_argument("uniform_int: bound must be nonzero");
        }
        // threshold = 2^64 mod bound; values below it would be overrepresented
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = engine_();
            if (x >= threshold) {
                return x % bound;
            }
        }
    }

    /// True with probability p. Always consumes exactly one draw, so the
    /// stream position is independent of the outcome.
    bool bernoulli(double p)
    {
        return next_double() < p;
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace beccsim
