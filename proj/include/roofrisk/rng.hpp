#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace roofrisk {

/// Deterministic 64-bit PRNG used everywhere randomness is needed.
///
/// The generator is a fixed linear congruential recurrence
///   state = state * 6364136223846793005 + 1442695040888963407
/// with the high 32 bits of the state as output. It is documented here so
/// that dataset splits, weight initialization and augmentation draws are
/// reproducible across platforms and independent implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {
        // decorrelate trivially close seeds
        next_u32();
        next_u32();
    }

    std::uint32_t next_u32() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<std::uint32_t>(state_ >> 32);
    }

    /// Uniform integer in [0, bound). bound must be >= 1.
    /// Uses plain modulo reduction; the bias is negligible for the small
    /// bounds used here and keeps the algorithm trivially portable.
    std::uint32_t next_below(std::uint32_t bound) {
        return next_u32() % bound;
    }

    /// Uniform double in [0, 1).
    double next_double() {
        return next_u32() * (1.0 / 4294967296.0);
    }

    /// Uniform double in (0, 1]; safe as a log() argument.
    double next_double_open() {
        return (next_u32() + 1.0) * (1.0 / 4294967296.0);
    }

    /// Standard normal via Box-Muller (fixed algorithm, no cached spare).
    double next_gaussian() {
        double u1 = next_double_open();
        double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    /// Fisher-Yates shuffle with next_below(); identical seed => identical order.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = next_below(static_cast<std::uint32_t>(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t state_;
};

} // namespace roofrisk
