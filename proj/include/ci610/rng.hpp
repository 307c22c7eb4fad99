#pragma once

#include <cstdint>
#include <random>

namespace ci610 {

// Deterministic seeded generator. Only the raw mt19937_64 stream is used
// (std::uniform_int_distribution is not portable across standard libraries,
// a plain modulo draw is). Every randomized entry point takes an explicit
// seed, so all reported results are reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Inclusive range; bias is negligible for the tiny ranges used here and
    // irrelevant anyway since only determinism matters.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<std::int64_t>(next() % span);
    }

    std::int64_t nonzero_uniform(std::int64_t lo, std::int64_t hi) {
        for (;;) {
            std::int64_t v = uniform(lo, hi);
            if (v != 0) return v;
        }
    }

private:
    std::mt19937_64 eng_;
};

} // namespace ci610
