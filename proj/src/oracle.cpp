#include "cake/oracle.hpp"

#include "cake/errors.hpp"

namespace cake {

std::uint64_t QueryLedger::evals() const {
    std::uint64_t sum = 0;
    for (const Counts& c : counts_) sum += c.eval;
    return sum;
}

std::uint64_t QueryLedger::marks() const {
    std::uint64_t sum = 0;
    for (const Counts& c : counts_) sum += c.mark;
    return sum;
}

QueryLedger QueryLedger::since(const QueryLedger& earlier) const {
    if (earlier.counts_.size() != counts_.size()) throw DomainError("ledger snapshot from a different oracle");
    QueryLedger delta(counts_.size());
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        delta.counts_[i].eval = counts_[i].eval - earlier.counts_[i].eval;
        delta.counts_[i].mark = counts_[i].mark - earlier.counts_[i].mark;
    }
    return delta;
}

Oracle::Oracle(Instance instance) : instance_(std::move(instance)), ledger_(instance_.size()) {}

void Oracle::check_agent(AgentId i) const {
    if (i >= instance_.size()) throw DomainError("no agent with index " + std::to_string(i));
}

Rational Oracle::eval(AgentId i, const Rational& x, const Rational& y) {
    check_agent(i);
    Rational v = instance_.valuation(i).value_of(x, y);
    ledger_.record_eval(i);
    return v;
}

MarkResult Oracle::right_mark(AgentId i, const Rational& x, const Rational& r) {
    check_agent(i);
    MarkResult m = instance_.valuation(i).right_mark(x, r);
    ledger_.record_mark(i);
    return m;
}

MarkResult Oracle::left_mark(AgentId i, const Rational& x, const Rational& r) {
    check_agent(i);
    MarkResult m = instance_.valuation(i).left_mark(x, r);
    ledger_.record_mark(i);
    return m;
}

Instance mirror_instance(const Instance& instance) {
    std::vector<Valuation> mirrored;
    mirrored.reserve(instance.size());
    for (const Valuation& v : instance.valuations()) mirrored.push_back(v.mirrored());
    return Instance(std::move(mirrored), instance.entitlements(), instance.names()).with_scales(instance.scales());
}

std::pair<Rational, Rational> mark_interval(Oracle& oracle, AgentId i, const Rational& r) {
    if (r > Rational(1) || r < Rational(0)) throw DomainError("mark value outside [0,1]: " + r.to_string());
    const Rational zero;
    MarkResult lo = oracle.left_mark(i, zero, r);
    MarkResult hi = oracle.right_mark(i, zero, r);
    return {lo.point(), hi.point()};
}

}  // namespace cake
