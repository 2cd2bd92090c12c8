#pragma once

#include <cstdint>
#include <random>

#include "cake/model.hpp"

namespace cake {

struct RandomInstanceOptions {
    std::size_t min_agents = 1;
    std::size_t max_agents = 6;
    std::size_t max_segments = 6;
    std::int64_t max_denominator = 12;
    double zero_segment_probability = 0.2;  // 0 gives hungry agents
    double equal_entitlement_probability = 0.5;
};

// Small exact instances for property tests. Widths are k/D with D <= the
// maximum denominator; values are small integer weights, normalized.
class RandomInstanceGenerator {
public:
    explicit RandomInstanceGenerator(std::uint64_t seed, RandomInstanceOptions options = {});

    Instance next();
    Valuation valuation();
    // A rational in [0, 1] with denominator at most max_denominator.
    Rational unit_rational();

    std::uint64_t seed() const { return seed_; }
    std::mt19937_64& engine() { return rng_; }

private:
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    std::uint64_t seed_;
    RandomInstanceOptions options_;
    std::mt19937_64 rng_;
};

}  // namespace cake
