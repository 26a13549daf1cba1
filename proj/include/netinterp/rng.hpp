#pragma once

#include <cstdint>
#include <random>

namespace netinterp {

// Seedable 64-bit generator used by every stochastic routine in the library.
// Wraps std::mt19937_64 but owns the bounded-integer and unit-interval
// mappings, so a given seed produces the same stream on every platform and
// standard library. Parallel trials split streams by seed offset: trial i of
// a run seeded with `base` uses seed base + i.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, n). Bitmask rejection; expected < 2 draws.
    uint64_t uniform_index(uint64_t n) {
        if (n <= 1) return 0;
        uint64_t mask = n - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        uint64_t x;
        do {
            x = next_u64() & mask;
        } while (x >= n);
        return x;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform_real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform_real() < p; }

    static Rng for_trial(uint64_t base_seed, uint64_t trial) { return Rng(base_seed + trial); }

private:
    std::mt19937_64 engine_;
};

}  // namespace netinterp
