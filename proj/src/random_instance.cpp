#include "cake/random_instance.hpp"

#include <algorithm>

namespace cake {

RandomInstanceGenerator::RandomInstanceGenerator(std::uint64_t seed, RandomInstanceOptions options)
    : seed_(seed), options_(options), rng_(seed) {}

std::int64_t RandomInstanceGenerator::uniform_int(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

Rational RandomInstanceGenerator::unit_rational() {
    const std::int64_t den = uniform_int(1, options_.max_denominator);
    return Rational(uniform_int(0, den), den);
}

Valuation RandomInstanceGenerator::valuation() {
    const auto k = static_cast<std::int64_t>(
        uniform_int(1, static_cast<std::int64_t>(std::min<std::size_t>(options_.max_segments, options_.max_denominator))));
    // Split D into k positive parts via k-1 distinct cut points in 1..D-1.
    const std::int64_t den = uniform_int(k, options_.max_denominator);
    std::vector<std::int64_t> cuts;
    for (std::int64_t c = 1; c < den; ++c) cuts.push_back(c);
    std::shuffle(cuts.begin(), cuts.end(), rng_);
    cuts.resize(static_cast<std::size_t>(k - 1));
    cuts.push_back(0);
    cuts.push_back(den);
    std::sort(cuts.begin(), cuts.end());

    std::bernoulli_distribution zero(options_.zero_segment_probability);
    std::vector<std::int64_t> weights;
    std::int64_t total = 0;
    for (std::int64_t s = 0; s < k; ++s) {
        weights.push_back(zero(rng_) ? 0 : uniform_int(1, 6));
        total += weights.back();
    }
    if (total == 0) {
        weights[static_cast<std::size_t>(uniform_int(0, k - 1))] = 1;
        total = 1;
    }
    std::vector<Segment> segs;
    for (std::size_t s = 0; s < weights.size(); ++s) {
        segs.push_back({Rational(cuts[s + 1] - cuts[s], den), Rational(weights[s], total)});
    }
    return Valuation(std::move(segs));
}

Instance RandomInstanceGenerator::next() {
    const auto n = static_cast<std::size_t>(
        uniform_int(static_cast<std::int64_t>(options_.min_agents), static_cast<std::int64_t>(options_.max_agents)));
    std::vector<Valuation> vals;
    for (std::size_t i = 0; i < n; ++i) vals.push_back(valuation());

    std::vector<Rational> w;
    std::bernoulli_distribution equal(options_.equal_entitlement_probability);
    if (equal(rng_)) {
        w.assign(n, Rational(1, static_cast<std::int64_t>(n)));
    } else {
        std::int64_t total = 0;
        std::vector<std::int64_t> raw;
        for (std::size_t i = 0; i < n; ++i) {
            raw.push_back(uniform_int(1, 6));
            total += raw.back();
        }
        for (std::int64_t r : raw) w.emplace_back(r, total);
    }
    return Instance(std::move(vals), std::move(w));
}

}  // namespace cake
