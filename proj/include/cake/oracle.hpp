#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cake/model.hpp"

namespace cake {

// Per-agent Robertson-Webb query counts.
class QueryLedger {
public:
    struct Counts {
        std::uint64_t eval = 0;
        std::uint64_t mark = 0;
        friend bool operator==(const Counts&, const Counts&) = default;
    };

    QueryLedger() = default;
    explicit QueryLedger(std::size_t agents) : counts_(agents) {}

    void record_eval(AgentId i) { ++counts_.at(i).eval; }
    void record_mark(AgentId i) { ++counts_.at(i).mark; }

    std::size_t agents() const { return counts_.size(); }
    const Counts& agent(AgentId i) const { return counts_.at(i); }
    std::uint64_t evals() const;
    std::uint64_t marks() const;
    std::uint64_t total() const { return evals() + marks(); }

    // Counts accrued since `earlier`, a snapshot of this ledger.
    QueryLedger since(const QueryLedger& earlier) const;

    friend bool operator==(const QueryLedger&, const QueryLedger&) = default;

private:
    std::vector<Counts> counts_;
};

// The only route by which decision and construction algorithms see the
// agents' valuations. Every successful eval or mark costs exactly one
// query; calls rejected with DomainError cost nothing.
class Oracle {
public:
    explicit Oracle(Instance instance);

    std::size_t agents() const { return instance_.size(); }
    const std::vector<Rational>& entitlements() const { return instance_.entitlements(); }

    // Promise checks on the instance class. They answer a question about
    // which algorithm applies, not about any valuation, and are not counted.
    bool all_hungry() const { return instance_.all_hungry(); }
    bool equal_entitlements() const { return instance_.equal_entitlements(); }

    Rational eval(AgentId i, const Rational& x, const Rational& y);
    MarkResult right_mark(AgentId i, const Rational& x, const Rational& r);
    MarkResult left_mark(AgentId i, const Rational& x, const Rational& r);

    const QueryLedger& ledger() const { return ledger_; }

private:
    void check_agent(AgentId i) const;

    Instance instance_;
    QueryLedger ledger_;
};

// Every agent's valuation reflected about 1/2; entitlements unchanged.
Instance mirror_instance(const Instance& instance);

// [leftmost r-mark, rightmost r-mark] of agent i, at a cost of two mark queries.
std::pair<Rational, Rational> mark_interval(Oracle& oracle, AgentId i, const Rational& r);

}  // namespace cake
