#pragma once

// Seeded RNG helpers. std::uniform_int_distribution is implementation
// defined, so byte-identical cross-platform output requires drawing from
// the raw mt19937_64 stream ourselves.

#include "hov/scalar.hpp"

#include <cstdint>
#include <random>

namespace hov {

struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    std::uint64_t next() { return engine(); }

    // Uniform in [0, m) by rejection.
    std::uint64_t below(std::uint64_t m) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % m;
        std::uint64_t v;
        do {
            v = engine();
        } while (v >= limit);
        return v % m;
    }

    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Uniform rational with numerator in [-bound, bound], denominator in
    // [1, max_den].
    Rat rational(std::int64_t bound, std::int64_t max_den) {
        const std::int64_t num = int_in(-bound, bound);
        const std::int64_t den = int_in(1, max_den);
        return Rat(num, den);
    }

    // Nonnegative rational in [0, 1] with denominator up to max_den.
    Rat unit_rational(std::int64_t max_den) {
        const std::int64_t den = int_in(1, max_den);
        const std::int64_t num = int_in(0, den);
        return Rat(num, den);
    }
};

}  // namespace hov
