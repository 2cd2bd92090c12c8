#include "cake/subsets.hpp"

#include <algorithm>
#include <bit>

#include "cake/errors.hpp"

namespace cake {

std::vector<Rational> subset_sums(const std::vector<Rational>& weights) {
    const std::size_t n = weights.size();
    if (n > kMaxSubsetAgents) throw DomainError("too many agents for subset enumeration: " + std::to_string(n));
    std::vector<Rational> sums(std::size_t{1} << n);
    for (AgentSet mask = 1; mask < sums.size(); ++mask) {
        const auto low = static_cast<std::size_t>(std::countr_zero(mask));
        sums[mask] = sums[mask & (mask - 1)] + weights[low];
    }
    return sums;
}

std::vector<AgentSet> subsets_by_cardinality(std::size_t n) {
    if (n > kMaxSubsetAgents) throw DomainError("too many agents for subset enumeration: " + std::to_string(n));
    std::vector<AgentSet> order(std::size_t{1} << n);
    for (AgentSet mask = 0; mask < order.size(); ++mask) order[mask] = mask;
    std::stable_sort(order.begin(), order.end(),
                     [](AgentSet a, AgentSet b) { return std::popcount(a) < std::popcount(b); });
    return order;
}

bool is_generic(const std::vector<Rational>& weights) { return min_subset_gap(weights) > Rational(0); }

Rational min_subset_gap(const std::vector<Rational>& weights) {
    std::vector<Rational> sums = subset_sums(weights);
    std::sort(sums.begin(), sums.end());
    if (sums.size() < 2) return Rational(0);
    Rational gap = sums[1] - sums[0];
    for (std::size_t k = 2; k < sums.size(); ++k) gap = min(gap, sums[k] - sums[k - 1]);
    return gap;
}

}  // namespace cake
