#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cake/model.hpp"
#include "cake/oracle.hpp"
#include "cake/subsets.hpp"

namespace cake {

// Fairness target: strong (> w_i), proportional (>= w_i) or plus_z (> w_i + z).
enum class Mode { strong, proportional, plus_z };

std::string to_string(Mode mode);

enum class MarkSide { right, left };

struct Decision {
    bool exists = false;
    Mode mode = Mode::strong;
    std::string algorithm;
    std::optional<Rational> z;

    // Witness for the subset DP: agents in cake order and the chain of marks
    // x_0 = 0, x_1, ..., x_n they produce. Empty unless exists.
    std::vector<AgentId> permutation;
    std::vector<Rational> marks;

    // Witness for the hungry/equal check: the r = t/n at which agent 0 and
    // `disagreeing` placed different marks.
    std::optional<Rational> threshold;
    std::optional<AgentId> disagreeing;

    // Queries issued by this call only.
    QueryLedger queries;
    // DP marks settled without a query because the starting point or the
    // requested value was already out of reach.
    std::uint64_t skipped_marks = 0;
};

// Result of a sequential marking pass.
struct MarkChain {
    MarkResult end;
    std::vector<Rational> points;  // x_0 .. x_k up to the first unreachable mark
};

// Agents sigma[0], sigma[1], ... each mark their share r[agent] starting at
// the previous mark. At most n mark queries; stops at the first unreachable mark.
MarkChain mark_sequence(Oracle& oracle, const std::vector<AgentId>& sigma, const Rational& start,
                        const std::vector<Rational>& shares, MarkSide side = MarkSide::right);

// b_N for every agent subset N: the leftmost point reachable when the agents
// of N mark their share one after another in the best order.
class BestMarkTable {
public:
    const MarkResult& best(AgentSet set) const { return best_.at(set); }
    // Agent that marked last in the order achieving best(set).
    std::optional<AgentId> last(AgentSet set) const;
    std::size_t agents() const { return agents_; }
    std::uint64_t skipped() const { return skipped_; }

    // Order achieving best(set), recovered by peeling off last() repeatedly.
    std::vector<AgentId> order(AgentSet set) const;
    // best() along order(set): 0, b_{N_1}, ..., b_{N_k}.
    std::vector<Rational> chain(AgentSet set) const;

    friend BestMarkTable best_mark_table(Oracle&, const std::vector<Rational>&, MarkSide);

private:
    std::size_t agents_ = 0;
    std::vector<MarkResult> best_;
    std::vector<int> last_;
    std::uint64_t skipped_ = 0;
};

// Fills the table by cardinality. A mark is skipped (no query) when its
// starting point is unreachable or its share exceeds 1. Ties keep the lowest
// agent index. At most n * 2^(n-1) queries.
BestMarkTable best_mark_table(Oracle& oracle, const std::vector<Rational>& shares, MarkSide side);

// Hungry agents with equal entitlements: compares every t/n-mark with agent
// 0's, returning at the first disagreement. At most n(n-1) mark queries.
Decision decide_hungry_equal(Oracle& oracle);

// Connected strongly-proportional allocation exists iff b_[n] < 1.
Decision decide_general(Oracle& oracle);

// Every agent strictly above w_i + z; requires z > 0.
Decision decide_plus_z(Oracle& oracle, const Rational& z);

// Connected proportional allocation, via left marks and b_[n] <= 1.
Decision decide_proportional(Oracle& oracle);

// Some r = t/n at which two agents' r-mark intervals are disjoint.
// Requires equal entitlements; at most 2n(n-1) mark queries.
bool necessary_condition(Oracle& oracle);

// Some r = t/n at which all agents' r-mark intervals are pairwise disjoint.
bool sufficient_condition(Oracle& oracle);

// Half the sum over agents i of the number of distinct w_N with N non-empty and i not in N.
Rational query_lower_bound(const std::vector<Rational>& entitlements);

}  // namespace cake
