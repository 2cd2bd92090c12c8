#include "cake/construction.hpp"

#include <algorithm>

#include "cake/errors.hpp"

namespace cake {

namespace {

const Rational kZero{0};
const Rational kOne{1};

struct Marked {
    Rational point;
    AgentId agent;
    Rational value;  // agent's value of the current sub-cake
};

// Appends the pieces of [a, b] to `out`; out.cuts already ends with a.
void halve(Oracle& oracle, std::vector<AgentId> agents, std::vector<Rational> values, const Rational& a,
           const Rational& b, Allocation& out) {
    const std::size_t k = agents.size();
    if (k == 1) {
        out.order.push_back(agents.front());
        out.cuts.push_back(b);
        return;
    }
    const std::size_t left_count = k / 2;
    const Rational fraction(static_cast<std::int64_t>(left_count), static_cast<std::int64_t>(k));

    std::vector<Marked> marks;
    marks.reserve(k);
    for (std::size_t s = 0; s < k; ++s) {
        MarkResult m = oracle.right_mark(agents[s], a, values[s] * fraction);
        // A zero-valued sub-cake can push the rightmost mark past b.
        marks.push_back({min(m.point(), b), agents[s], values[s]});
    }
    std::sort(marks.begin(), marks.end(), [](const Marked& l, const Marked& r) {
        return l.point != r.point ? l.point < r.point : l.agent < r.agent;
    });
    const Rational cut = marks[left_count - 1].point;

    std::vector<AgentId> left_agents, right_agents;
    std::vector<Rational> left_values, right_values;
    for (std::size_t s = 0; s < k; ++s) {
        const AgentId agent = marks[s].agent;
        if (s < left_count) {
            left_agents.push_back(agent);
            left_values.push_back(left_count > 1 ? oracle.eval(agent, a, cut) : kZero);
        } else {
            right_agents.push_back(agent);
            right_values.push_back(k - left_count > 1 ? oracle.eval(agent, cut, b) : kZero);
        }
    }
    halve(oracle, std::move(left_agents), std::move(left_values), a, cut, out);
    halve(oracle, std::move(right_agents), std::move(right_values), cut, b, out);
}

void require_complete(const Allocation& allocation, std::size_t n) {
    if (!is_permutation_of(allocation.order, n) || allocation.cuts.size() != n + 1) {
        throw PreconditionError("allocation must give one piece to every agent");
    }
    if (allocation.cuts.front() != kZero || allocation.cuts.back() != kOne) {
        throw PreconditionError("allocation must span [0,1]");
    }
    if (!std::is_sorted(allocation.cuts.begin(), allocation.cuts.end())) {
        throw PreconditionError("allocation cuts must be non-decreasing");
    }
}

Allocation construct_chain(Oracle& oracle, const std::vector<AgentId>& sigma, const std::vector<Rational>& shares) {
    const std::size_t n = oracle.agents();
    if (!is_permutation_of(sigma, n)) throw PreconditionError("witness is not a permutation of the agents");
    for (const Rational& s : shares) {
        if (s > kOne) throw PreconditionError("share " + s.to_string() + " exceeds the whole cake");
    }
    const MarkChain chain = mark_sequence(oracle, sigma, kZero, shares);
    if (!(chain.end < MarkResult(kOne))) throw PreconditionError("mark chain along the witness does not end before 1");

    const std::vector<Rational>& x = chain.points;
    std::vector<Rational> y(n + 1);
    y[n] = kOne;
    for (std::size_t k = n - 1; k >= 1; --k) {
        const AgentId next = sigma[k];
        const Rational surplus = oracle.eval(next, x[k], y[k + 1]) - shares[next];
        y[k] = oracle.right_mark(next, x[k], surplus / Rational(2)).point();
    }
    y[0] = kZero;
    return Allocation{std::move(y), sigma};
}

}  // namespace

Allocation even_paz(Oracle& oracle, const std::vector<AgentId>& agents, const Rational& a, const Rational& b) {
    if (agents.empty()) throw PreconditionError("even_paz needs at least one agent");
    std::vector<bool> seen(oracle.agents(), false);
    for (AgentId i : agents) {
        if (i >= oracle.agents() || seen[i]) throw PreconditionError("even_paz: agents must be distinct and valid");
        seen[i] = true;
    }
    if (!(a < b)) throw PreconditionError("even_paz needs a < b");

    std::vector<Rational> values;
    values.reserve(agents.size());
    for (AgentId i : agents) {
        Rational v = agents.size() > 1 ? oracle.eval(i, a, b) : Rational(1);
        if (v == kZero) {
            throw PreconditionError("agent " + std::to_string(i) + " values [" + a.to_string() + ", " + b.to_string() +
                                    "] at 0");
        }
        values.push_back(std::move(v));
    }
    Allocation out;
    out.cuts.push_back(a);
    halve(oracle, agents, std::move(values), a, b, out);
    return out;
}

Allocation strengthen(Oracle& oracle, const Allocation& allocation) {
    const std::size_t n = oracle.agents();
    require_complete(allocation, n);
    if (!oracle.all_hungry()) throw PreconditionError("strengthen requires hungry agents");
    const std::vector<Rational>& w = oracle.entitlements();

    Allocation out = allocation;
    std::vector<Rational> value(n);  // by position
    std::vector<bool> strict(n);
    for (std::size_t k = 0; k < n; ++k) {
        const AgentId agent = out.order[k];
        value[k] = oracle.eval(agent, out.left(k), out.right(k));
        if (value[k] < w[agent]) throw PreconditionError("strengthen requires a proportional allocation");
        strict[k] = value[k] > w[agent];
    }
    if (std::none_of(strict.begin(), strict.end(), [](bool s) { return s; })) {
        throw PreconditionError("strengthen requires at least one agent strictly above entitlement");
    }

    while (!std::all_of(strict.begin(), strict.end(), [](bool s) { return s; })) {
        std::size_t k = 0;
        while (strict[k] == strict[k + 1]) ++k;
        const Rational z1 = out.cuts[k], z2 = out.cuts[k + 1], z3 = out.cuts[k + 2];
        const AgentId left = out.order[k], right = out.order[k + 1];
        if (strict[k]) {
            // Give the exact right neighbour part of the slack beyond left's w-mark.
            const Rational y = oracle.right_mark(left, z1, w[left]).point();
            out.cuts[k + 1] = midpoint(y, z2);
        } else {
            const Rational y = oracle.right_mark(right, z2, value[k + 1] - w[right]).point();
            out.cuts[k + 1] = midpoint(z2, y);
        }
        value[k] = oracle.eval(left, z1, out.cuts[k + 1]);
        value[k + 1] = oracle.eval(right, out.cuts[k + 1], z3);
        strict[k] = value[k] > w[left];
        strict[k + 1] = value[k + 1] > w[right];
        if (!strict[k] || !strict[k + 1]) throw PreconditionError("boundary move did not make both agents strict");
    }
    return out;
}

std::optional<Allocation> construct_hungry_equal(Oracle& oracle) {
    const Decision decision = decide_hungry_equal(oracle);
    if (!decision.exists) return std::nullopt;

    const std::size_t n = oracle.agents();
    const Rational r = *decision.threshold;
    std::size_t t = 1;
    while (Rational(static_cast<std::int64_t>(t), static_cast<std::int64_t>(n)) != r) ++t;

    std::vector<std::pair<Rational, AgentId>> marks;
    marks.reserve(n);
    for (AgentId i = 0; i < n; ++i) marks.emplace_back(oracle.right_mark(i, kZero, r).point(), i);
    std::sort(marks.begin(), marks.end());
    const Rational x = marks[t - 1].first;

    std::vector<AgentId> low, high;
    for (std::size_t s = 0; s < n; ++s) (s < t ? low : high).push_back(marks[s].second);

    Allocation left = even_paz(oracle, low, kZero, x);
    const Allocation right = even_paz(oracle, high, x, kOne);
    left.cuts.insert(left.cuts.end(), right.cuts.begin() + 1, right.cuts.end());
    left.order.insert(left.order.end(), right.order.begin(), right.order.end());
    return strengthen(oracle, left);
}

Allocation construct_from_witness(Oracle& oracle, const std::vector<AgentId>& sigma) {
    return construct_chain(oracle, sigma, oracle.entitlements());
}

Allocation construct_plus_z(Oracle& oracle, const std::vector<AgentId>& sigma, const Rational& z) {
    if (z < kZero) throw PreconditionError("construct_plus_z requires z >= 0");
    std::vector<Rational> shares = oracle.entitlements();
    for (Rational& s : shares) s += z;
    return construct_chain(oracle, sigma, shares);
}

Allocation construct_proportional(Oracle& oracle, const std::vector<AgentId>& sigma) {
    const std::size_t n = oracle.agents();
    if (!is_permutation_of(sigma, n)) throw PreconditionError("witness is not a permutation of the agents");
    const MarkChain chain = mark_sequence(oracle, sigma, kZero, oracle.entitlements(), MarkSide::left);
    if (!chain.end.reachable()) throw PreconditionError("left-mark chain along the witness runs off the cake");
    std::vector<Rational> cuts(chain.points.begin(), chain.points.end() - 1);
    cuts.push_back(kOne);
    return Allocation{std::move(cuts), sigma};
}

bool VerifierReport::all_strict() const {
    return !strict.empty() && std::all_of(strict.begin(), strict.end(), [](bool s) { return s; });
}

bool VerifierReport::all_weak() const {
    return !weak.empty() && std::all_of(weak.begin(), weak.end(), [](bool s) { return s; });
}

bool VerifierReport::satisfied(Mode mode) const {
    if (!structurally_valid()) return false;
    return mode == Mode::proportional ? all_weak() : all_strict();
}

VerifierReport verify(const Instance& instance, const Allocation& allocation, Mode mode, const Rational& z) {
    const std::size_t n = instance.size();
    VerifierReport report;
    report.well_formed = is_permutation_of(allocation.order, n) && allocation.cuts.size() == n + 1 &&
                         std::all_of(allocation.cuts.begin(), allocation.cuts.end(),
                                     [](const Rational& c) { return c >= kZero && c <= kOne; });
    if (!report.well_formed) return report;
    report.connected = std::is_sorted(allocation.cuts.begin(), allocation.cuts.end());
    report.covers_cake = allocation.cuts.front() == kZero && allocation.cuts.back() == kOne;

    const Rational bonus = mode == Mode::plus_z ? z : kZero;
    report.values.assign(n, kZero);
    report.strict.assign(n, false);
    report.weak.assign(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        const AgentId agent = allocation.order[k];
        const Rational& a = allocation.cuts[k];
        const Rational& b = allocation.cuts[k + 1];
        report.values[agent] = a <= b ? instance.valuation(agent).value_of(a, b) : kZero;
        const Rational target = instance.entitlements()[agent] + bonus;
        report.strict[agent] = report.values[agent] > target;
        report.weak[agent] = report.values[agent] >= target;
    }
    return report;
}

}  // namespace cake
