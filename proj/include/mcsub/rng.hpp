#pragma once

#include <cstdint>

namespace mcsub {

// Deterministic 64-bit generator (splitmix64). Every randomized operation in
// the library takes an explicit seed and derives all of its draws from one of
// these; the sequence is identical on every platform. Batch harnesses give
// trial i the seed `base ^ i`.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound), unbiased via rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t v = next();
            if (v >= threshold) return v % bound;
        }
    }

  private:
    std::uint64_t state_;
};

inline std::uint64_t trial_seed(std::uint64_t base, std::uint64_t trial) { return base ^ trial; }

}  // namespace mcsub
