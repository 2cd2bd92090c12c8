#include "cake/brute_force.hpp"

#include <algorithm>
#include <numeric>

#include "cake/errors.hpp"

namespace cake {

MarkChain mark_chain(const Instance& instance, const std::vector<AgentId>& order, const std::vector<Rational>& shares,
                     MarkSide side) {
    if (!is_permutation_of(order, instance.size())) throw DomainError("mark_chain: not a permutation of the agents");
    MarkChain chain;
    chain.points.emplace_back(0);
    for (AgentId agent : order) {
        if (shares[agent] > Rational(1)) return chain;
        const Valuation& v = instance.valuation(agent);
        MarkResult next = side == MarkSide::right ? v.right_mark(chain.points.back(), shares[agent])
                                                  : v.left_mark(chain.points.back(), shares[agent]);
        if (!next.reachable()) return chain;
        chain.points.push_back(next.point());
    }
    chain.end = chain.points.back();
    return chain;
}

bool exists_by_enumeration(const Instance& instance, Mode mode, const Rational& z, std::size_t cap) {
    const std::size_t n = instance.size();
    if (n > cap) throw PreconditionError("enumeration refused: " + std::to_string(n) + " agents exceeds cap " +
                                         std::to_string(cap));
    std::vector<Rational> shares = instance.entitlements();
    if (mode == Mode::plus_z) {
        for (Rational& s : shares) s += z;
    }
    const MarkSide side = mode == Mode::proportional ? MarkSide::left : MarkSide::right;

    std::vector<AgentId> order(n);
    std::iota(order.begin(), order.end(), AgentId{0});
    do {
        const MarkChain chain = mark_chain(instance, order, shares, side);
        if (mode == Mode::proportional ? chain.end.reachable() : chain.end < MarkResult(Rational(1))) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

LeftMarkMisuse left_mark_misuse_demo(const Instance& instance, const std::vector<AgentId>& order) {
    LeftMarkMisuse report;
    report.order = order;
    report.left_chain = mark_chain(instance, order, instance.entitlements(), MarkSide::left);
    report.left_chain_ends_early = report.left_chain.end < MarkResult(Rational(1));
    report.strong_exists = exists_by_enumeration(instance, Mode::strong);
    return report;
}

}  // namespace cake
