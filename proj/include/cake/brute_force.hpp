#pragma once

#include <vector>

#include "cake/decision.hpp"
#include "cake/model.hpp"

namespace cake {

inline constexpr std::size_t kDefaultEnumerationCap = 8;

// Chain of marks along `order`, computed directly on the valuations with no
// ledger. Right marks unless side is left.
MarkChain mark_chain(const Instance& instance, const std::vector<AgentId>& order, const std::vector<Rational>& shares,
                     MarkSide side);

// Tries all n! agent orders. strong: some right-mark chain of w ends < 1;
// plus_z: same with w + z; proportional: some left-mark chain of w stays on
// the cake. Throws PreconditionError above `cap` agents.
bool exists_by_enumeration(const Instance& instance, Mode mode, const Rational& z = Rational(0),
                           std::size_t cap = kDefaultEnumerationCap);

struct LeftMarkMisuse {
    std::vector<AgentId> order;
    MarkChain left_chain;
    bool left_chain_ends_early = false;  // left-mark chain stops strictly before 1
    bool strong_exists = false;          // ground truth from enumeration
};

// Runs the entitlement chain with leftmost marks along `order` and sets it
// against the ground truth. On the first worked example with order
// (Chana, Alice, Bob) the chain ends early although no connected
// strongly-proportional allocation exists.
LeftMarkMisuse left_mark_misuse_demo(const Instance& instance, const std::vector<AgentId>& order = {2, 0, 1});

}  // namespace cake
