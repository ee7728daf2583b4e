#pragma once

#include <cstdint>
#include <random>

namespace qgel {

// Deterministic randomness source. Same seed, same stream, on every platform:
// mt19937_64 is fully specified by the standard, and bounded draws use
// rejection sampling instead of std::uniform_int_distribution (whose mapping
// is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform in [0, bound); bound must be nonzero.
    std::uint64_t below(std::uint64_t bound);

    // Uniform in [lo, hi], both inclusive.
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi);

private:
    std::mt19937_64 gen_;
};

} // namespace qgel
