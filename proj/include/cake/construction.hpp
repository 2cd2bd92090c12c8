#pragma once

#include <optional>
#include <vector>

#include "cake/decision.hpp"
#include "cake/model.hpp"
#include "cake/oracle.hpp"

namespace cake {

// Connected division of [a, b] among `agents` by recursive halving: every
// agent ends up with at least V_i([a, b]) / |agents|. Each level costs one
// eval and one mark per agent, so O(k log k) queries for k agents.
// Throws PreconditionError if a >= b or some agent values [a, b] at 0.
Allocation even_paz(Oracle& oracle, const std::vector<AgentId>& agents, const Rational& a, const Rational& b);

// Turns a connected proportional allocation with at least one strict agent
// into a strongly-proportional one by nudging one boundary per round between
// a strict agent and an exact neighbour. Hungry agents only; n evals plus
// three queries per round.
Allocation strengthen(Oracle& oracle, const Allocation& allocation);

// Hungry agents with equal entitlements: splits at a disputed t/n-mark,
// divides each side proportionally and strengthens. nullopt when no
// strongly-proportional connected allocation exists.
std::optional<Allocation> construct_hungry_equal(Oracle& oracle);

// Backward construction from an order sigma whose right-mark chain ends
// before 1. Every agent ends strictly above its entitlement.
// Throws PreconditionError if sigma is not such a witness.
Allocation construct_from_witness(Oracle& oracle, const std::vector<AgentId>& sigma);

// Same with every share raised by z >= 0; every agent ends above w_i + z.
Allocation construct_plus_z(Oracle& oracle, const std::vector<AgentId>& sigma, const Rational& z);

// Left-mark chain along sigma; the last agent takes the rest of the cake.
// Every agent gets at least its entitlement. Throws PreconditionError if the
// chain is unreachable.
Allocation construct_proportional(Oracle& oracle, const std::vector<AgentId>& sigma);

// Exact per-agent check, computed directly on the valuations.
struct VerifierReport {
    bool well_formed = false;  // n+1 cuts inside [0,1] and a permutation of the agents
    bool connected = false;    // cuts non-decreasing
    bool covers_cake = false;  // first cut 0, last cut 1
    std::vector<Rational> values;  // per agent (indexed by agent id)
    std::vector<bool> strict;      // value > target
    std::vector<bool> weak;        // value >= target

    bool structurally_valid() const { return well_formed && connected && covers_cake; }
    bool all_strict() const;
    bool all_weak() const;
    // Structurally valid and every agent meets the mode's target.
    bool satisfied(Mode mode) const;
};

// Targets are w_i, or w_i + z in plus_z mode.
VerifierReport verify(const Instance& instance, const Allocation& allocation, Mode mode,
                      const Rational& z = Rational(0));

}  // namespace cake
