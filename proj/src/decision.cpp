#include "cake/decision.hpp"

#include <algorithm>

#include "cake/errors.hpp"

namespace cake {

namespace {

const Rational kZero{0};
const Rational kOne{1};

void require_equal_entitlements(const Oracle& oracle, const char* what) {
    if (!oracle.equal_entitlements()) throw PreconditionError(std::string(what) + " requires equal entitlements");
}

MarkResult issue_mark(Oracle& oracle, MarkSide side, AgentId i, const Rational& x, const Rational& r) {
    return side == MarkSide::right ? oracle.right_mark(i, x, r) : oracle.left_mark(i, x, r);
}

Decision run_subset_dp(Oracle& oracle, const std::vector<Rational>& shares, MarkSide side, Mode mode) {
    const QueryLedger before = oracle.ledger();
    const BestMarkTable table = best_mark_table(oracle, shares, side);
    const AgentSet everyone = full_set(oracle.agents());
    const MarkResult& end = table.best(everyone);

    Decision d;
    d.mode = mode;
    d.algorithm = "subset_dp";
    d.exists = mode == Mode::proportional ? end.reachable() : end < MarkResult(kOne);
    if (d.exists) {
        d.permutation = table.order(everyone);
        d.marks = table.chain(everyone);
    }
    d.skipped_marks = table.skipped();
    d.queries = oracle.ledger().since(before);
    return d;
}

std::vector<std::pair<Rational, Rational>> intervals_at(Oracle& oracle, const Rational& r) {
    std::vector<std::pair<Rational, Rational>> out;
    out.reserve(oracle.agents());
    for (AgentId i = 0; i < oracle.agents(); ++i) out.push_back(mark_interval(oracle, i, r));
    return out;
}

bool disjoint(const std::pair<Rational, Rational>& a, const std::pair<Rational, Rational>& b) {
    return a.second < b.first || b.second < a.first;
}

}  // namespace

std::string to_string(Mode mode) {
    switch (mode) {
        case Mode::strong: return "strong";
        case Mode::proportional: return "proportional";
        case Mode::plus_z: return "plus_z";
    }
    return "unknown";
}

MarkChain mark_sequence(Oracle& oracle, const std::vector<AgentId>& sigma, const Rational& start,
                        const std::vector<Rational>& shares, MarkSide side) {
    if (!is_permutation_of(sigma, oracle.agents())) throw DomainError("mark_sequence: not a permutation of the agents");
    if (shares.size() != oracle.agents()) throw DomainError("mark_sequence: one share per agent required");
    if (start < kZero || start > kOne) throw DomainError("mark_sequence: start outside [0,1]");
    for (const Rational& r : shares) {
        if (r < kZero || r > kOne) throw DomainError("mark_sequence: share outside [0,1]: " + r.to_string());
    }
    MarkChain chain;
    chain.points.push_back(start);
    for (AgentId agent : sigma) {
        MarkResult next = issue_mark(oracle, side, agent, chain.points.back(), shares[agent]);
        if (!next.reachable()) return chain;
        chain.points.push_back(next.point());
    }
    chain.end = chain.points.back();
    return chain;
}

std::optional<AgentId> BestMarkTable::last(AgentSet set) const {
    const int a = last_.at(set);
    if (a < 0) return std::nullopt;
    return static_cast<AgentId>(a);
}

std::vector<AgentId> BestMarkTable::order(AgentSet set) const {
    std::vector<AgentId> out;
    while (set != 0) {
        const auto a = last(set);
        if (!a) throw DomainError("no order reaches this subset's best mark");
        out.push_back(*a);
        set &= ~(AgentSet{1} << *a);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<Rational> BestMarkTable::chain(AgentSet set) const {
    const std::vector<AgentId> agents = order(set);
    std::vector<Rational> points{best_.at(0).point()};
    AgentSet prefix = 0;
    for (AgentId a : agents) {
        prefix |= AgentSet{1} << a;
        points.push_back(best_.at(prefix).point());
    }
    return points;
}

BestMarkTable best_mark_table(Oracle& oracle, const std::vector<Rational>& shares, MarkSide side) {
    const std::size_t n = oracle.agents();
    if (n > kMaxSubsetAgents) throw PreconditionError("subset DP supports at most 20 agents");
    if (shares.size() != n) throw DomainError("best_mark_table: one share per agent required");

    BestMarkTable table;
    table.agents_ = n;
    table.best_.assign(std::size_t{1} << n, MarkResult::unreachable());
    table.last_.assign(std::size_t{1} << n, -1);
    table.best_[0] = kZero;

    for (AgentSet set : subsets_by_cardinality(n)) {
        if (set == 0) continue;
        for (AgentId i = 0; i < n; ++i) {
            if (!contains(set, i)) continue;
            const MarkResult& from = table.best_[set & ~(AgentSet{1} << i)];
            if (!from.reachable() || shares[i] > kOne) {
                ++table.skipped_;
                continue;
            }
            MarkResult y = issue_mark(oracle, side, i, from.point(), shares[i]);
            if (y < table.best_[set]) {
                table.best_[set] = std::move(y);
                table.last_[set] = static_cast<int>(i);
            }
        }
    }
    return table;
}

Decision decide_hungry_equal(Oracle& oracle) {
    require_equal_entitlements(oracle, "decide_hungry_equal");
    if (!oracle.all_hungry()) throw PreconditionError("decide_hungry_equal requires hungry agents");

    const QueryLedger before = oracle.ledger();
    const std::size_t n = oracle.agents();
    const auto denom = static_cast<std::int64_t>(n);
    Decision d;
    d.mode = Mode::strong;
    d.algorithm = "hungry_equal";
    for (std::int64_t t = 1; t < denom && !d.exists; ++t) {
        const Rational r(t, denom);
        const MarkResult reference = oracle.right_mark(0, kZero, r);
        for (AgentId i = 1; i < n; ++i) {
            if (oracle.right_mark(i, kZero, r) != reference) {
                d.exists = true;
                d.threshold = r;
                d.disagreeing = i;
                break;
            }
        }
    }
    d.queries = oracle.ledger().since(before);
    return d;
}

Decision decide_general(Oracle& oracle) {
    return run_subset_dp(oracle, oracle.entitlements(), MarkSide::right, Mode::strong);
}

Decision decide_plus_z(Oracle& oracle, const Rational& z) {
    if (z <= kZero) throw PreconditionError("decide_plus_z requires z > 0; use decide_general for z = 0");
    std::vector<Rational> shares = oracle.entitlements();
    for (Rational& s : shares) s += z;
    Decision d = run_subset_dp(oracle, shares, MarkSide::right, Mode::plus_z);
    d.z = z;
    return d;
}

Decision decide_proportional(Oracle& oracle) {
    return run_subset_dp(oracle, oracle.entitlements(), MarkSide::left, Mode::proportional);
}

bool necessary_condition(Oracle& oracle) {
    require_equal_entitlements(oracle, "necessary_condition");
    const auto n = static_cast<std::int64_t>(oracle.agents());
    for (std::int64_t t = 1; t < n; ++t) {
        const auto iv = intervals_at(oracle, Rational(t, n));
        for (std::size_t i = 0; i < iv.size(); ++i) {
            for (std::size_t j = i + 1; j < iv.size(); ++j) {
                if (disjoint(iv[i], iv[j])) return true;
            }
        }
    }
    return false;
}

bool sufficient_condition(Oracle& oracle) {
    require_equal_entitlements(oracle, "sufficient_condition");
    const auto n = static_cast<std::int64_t>(oracle.agents());
    for (std::int64_t t = 1; t < n; ++t) {
        auto iv = intervals_at(oracle, Rational(t, n));
        std::sort(iv.begin(), iv.end());
        bool separated = true;
        for (std::size_t k = 0; k + 1 < iv.size() && separated; ++k) separated = iv[k].second < iv[k + 1].first;
        if (separated) return true;
    }
    return false;
}

Rational query_lower_bound(const std::vector<Rational>& entitlements) {
    const std::size_t n = entitlements.size();
    const std::vector<Rational> sums = subset_sums(entitlements);
    Rational total;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> seen;
        for (AgentSet set = 1; set < sums.size(); ++set) {
            if (!contains(set, i)) seen.push_back(sums[set]);
        }
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        total += Rational(static_cast<std::int64_t>(seen.size()));
    }
    return total / Rational(2);
}

}  // namespace cake
