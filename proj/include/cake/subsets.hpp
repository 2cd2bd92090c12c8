#pragma once

#include <cstdint>
#include <vector>

#include "cake/rational.hpp"

namespace cake {

using AgentSet = std::uint32_t;

inline constexpr std::size_t kMaxSubsetAgents = 20;

inline bool contains(AgentSet set, std::size_t agent) { return ((set >> agent) & 1U) != 0; }
inline AgentSet full_set(std::size_t n) { return n >= 32 ? ~AgentSet{0} : ((AgentSet{1} << n) - 1); }

// w_N for every N, indexed by bitmask. Throws DomainError for more than kMaxSubsetAgents weights.
std::vector<Rational> subset_sums(const std::vector<Rational>& weights);

// All subsets of {0..n-1} ordered by cardinality, then by mask value.
std::vector<AgentSet> subsets_by_cardinality(std::size_t n);

// True iff w_N != w_N' for all distinct N, N'.
bool is_generic(const std::vector<Rational>& weights);

// Smallest gap between consecutive distinct subset sums (0 when two subsets collide).
Rational min_subset_gap(const std::vector<Rational>& weights);

}  // namespace cake
