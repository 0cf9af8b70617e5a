#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace netdeploy {

/// Seeded random source used everywhere in the simulator.
///
/// Wraps std::mt19937_64 (whose output sequence is fixed by the standard)
/// and derives uniform doubles and bounded integers from raw 64-bit words
/// instead of going through std::uniform_*_distribution, so that a given
/// seed produces the same stream on every platform and compiler.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1), 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound) via bitmask rejection.
    std::uint64_t uniform_below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
        const std::uint64_t mask = std::bit_ceil(bound) - 1;
        while (true) {
            const std::uint64_t x = engine_() & mask;
            if (x < bound) return x;
        }
    }

    std::uint64_t next_word() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Seed for run `index` of an ensemble keyed by `stream`.
///
/// SplitMix64 finalizer over distinct inputs; bijective, so seeds for
/// different indices under the same stream never collide.
inline std::uint64_t derive_run_seed(std::uint64_t stream, std::uint64_t index) {
    std::uint64_t z = stream + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace netdeploy
