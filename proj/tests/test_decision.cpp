#include "helpers.hpp"

#include <algorithm>
#include <numeric>

#include "cake/brute_force.hpp"
#include "cake/decision.hpp"
#include "cake/errors.hpp"
#include "cake/fixtures.hpp"

using namespace cake;
using namespace cake::test;

namespace {

Decision general(const Instance& inst) {
    Oracle o(inst);
    return decide_general(o);
}

bool any_unreachable(const Instance& inst, const std::vector<Rational>& shares) {
    // Every (subset, agent) mark the table asks for, computed off-oracle.
    const std::size_t n = inst.size();
    std::vector<MarkResult> best(std::size_t{1} << n);
    best[0] = MarkResult(Rational(0));
    bool hit = false;
    for (AgentSet set : subsets_by_cardinality(n)) {
        if (set == 0) continue;
        for (AgentId i = 0; i < n; ++i) {
            if (!contains(set, i)) continue;
            const MarkResult& from = best[set & ~(AgentSet{1} << i)];
            MarkResult m = from.reachable() && shares[i] <= Rational(1)
                               ? inst.valuation(i).right_mark(from.point(), shares[i])
                               : MarkResult::unreachable();
            if (!m.reachable()) hit = true;
            if (m < best[set]) best[set] = m;
        }
    }
    return hit;
}

}  // namespace

TEST_CASE("mark_sequence") {
    Oracle three(uniform_instance(3));
    const MarkChain c = mark_sequence(three, {0, 1, 2}, Rational(0), equal_shares(3));
    CHECK(c.end.point() == Rational(1));
    CHECK(c.points == Qs({"0", "1/3", "2/3", "1"}));
    CHECK(three.ledger().marks() == 3);

    Oracle two(Instance({Valuation::uniform(), halves(Rational(1))}, equal_shares(2)));
    const MarkChain d = mark_sequence(two, {1, 0}, Rational(0), equal_shares(2));
    CHECK(d.points == Qs({"0", "1/4", "3/4"}));
    CHECK(d.end.point() == Q("3/4"));

    Oracle u(uniform_instance(2));
    const MarkChain e = mark_sequence(u, {0, 1}, Q("1/2"), Qs({"1/3", "1/3"}));
    CHECK_FALSE(e.end.reachable());
    CHECK(e.points == Qs({"1/2", "5/6"}));
}

TEST_CASE("decide_hungry_equal") {
    for (std::size_t n = 2; n <= 5; ++n) {
        Oracle o(uniform_instance(n));
        const Decision d = decide_hungry_equal(o);
        CHECK_FALSE(d.exists);
        CHECK(d.queries.total() == n * (n - 1));
    }
    Oracle bc(bob_chana());
    const Decision d = decide_hungry_equal(bc);
    CHECK(d.exists);
    CHECK(d.threshold == Q("1/2"));
    CHECK(d.disagreeing == AgentId{1});
    // Bob's 1/2-mark 51/110 differs from Chana's 9/22.
    CHECK(bob1().right_mark(Rational(0), Q("1/2")).point() == Q("51/110"));
    CHECK(chana().right_mark(Rational(0), Q("1/2")).point() == Q("9/22"));

    Oracle non_hungry(gen_example(1));
    CHECK_THROWS_AS(decide_hungry_equal(non_hungry), PreconditionError);
    Oracle unequal(Instance({Valuation::uniform(), Valuation::uniform()}, Qs({"1/3", "2/3"})));
    CHECK_THROWS_AS(decide_hungry_equal(unequal), PreconditionError);
}

TEST_CASE("decide_general on the worked examples") {
    CHECK_FALSE(general(gen_example(1)).exists);
    const Decision two = general(gen_example(2));
    CHECK(two.exists);
    REQUIRE(two.marks.size() == 4);
    CHECK(two.marks.back() < Rational(1));
    CHECK(two.marks.front() == Rational(0));
    CHECK_FALSE(general(gen_example(3)).exists);
    CHECK_FALSE(general(uniform_instance(4)).exists);
    CHECK(general(bob_chana()).exists);
}

TEST_CASE("decide_general witness replays") {
    const Instance inst = gen_example(2);
    const Decision d = general(inst);
    const MarkChain replay = mark_chain(inst, d.permutation, inst.entitlements(), MarkSide::right);
    CHECK(replay.points == d.marks);
}

TEST_CASE("decide_general query budget") {
    for (std::size_t n = 1; n <= 8; ++n) {
        const Decision d = general(uniform_instance(n));
        CHECK(d.queries.total() == n << (n - 1));
        CHECK(d.queries.evals() == 0);
        CHECK(d.skipped_marks == 0);
    }
    const Decision ex1 = general(gen_example(1));
    CHECK(ex1.queries.total() == 12);
}

TEST_CASE("decide_plus_z") {
    Oracle u(uniform_instance(3));
    CHECK_FALSE(decide_plus_z(u, Q("1/100")).exists);
    Oracle bad(uniform_instance(3));
    CHECK_THROWS_AS(decide_plus_z(bad, Rational(0)), PreconditionError);
    CHECK_THROWS_AS(decide_plus_z(bad, Q("-1/2")), PreconditionError);

    const Instance two_part = gen_thm11(3, Q("1/12"));
    Oracle base(two_part);
    CHECK_FALSE(decide_plus_z(base, Q("1/12")).exists);
    CHECK(general(two_part).exists);  // the weaker target is met on the same instance
    Oracle pert(gen_thm11(3, Q("1/12"), std::nullopt, true));
    CHECK(decide_plus_z(pert, Q("1/12")).exists);

    // Shares above 1 are settled without asking.
    Oracle big(Instance({Valuation::uniform(), Valuation::uniform()}, Qs({"1/4", "3/4"})));
    const Decision d = decide_plus_z(big, Q("1/2"));
    CHECK_FALSE(d.exists);
    CHECK(d.skipped_marks > 0);
    CHECK(d.queries.total() + d.skipped_marks == 4);
}

TEST_CASE("decide_proportional") {
    for (std::size_t n = 1; n <= 5; ++n) {
        Oracle o(uniform_instance(n));
        const Decision d = decide_proportional(o);
        CHECK(d.exists);
        CHECK(d.marks.back() == Rational(1));
    }
    for (int k = 1; k <= 3; ++k) {
        Oracle o(gen_example(k));
        CHECK(decide_proportional(o).exists);
    }
    const Instance skew({halves(Rational(0)), halves(Rational(1))}, Qs({"1/4", "3/4"}));
    Oracle o(skew);
    const Decision d = decide_proportional(o);
    CHECK(d.exists);
    CHECK(d.permutation == std::vector<AgentId>{1, 0});
    CHECK(d.marks == Qs({"0", "3/8", "5/8"}));
}

TEST_CASE("necessary and sufficient conditions") {
    Oracle ex1(gen_example(1));
    CHECK(necessary_condition(ex1));
    Oracle ex1b(gen_example(1));
    CHECK_FALSE(sufficient_condition(ex1b));
    Oracle ex3(gen_example(3));
    CHECK(necessary_condition(ex3));
    Oracle u(uniform_instance(3));
    CHECK_FALSE(necessary_condition(u));
    Oracle u2(uniform_instance(3));
    CHECK_FALSE(sufficient_condition(u2));
    Oracle bc(bob_chana());
    CHECK(sufficient_condition(bc));
    CHECK(general(bob_chana()).exists);
    Oracle unequal(Instance({Valuation::uniform(), Valuation::uniform()}, Qs({"1/3", "2/3"})));
    CHECK_THROWS_AS(necessary_condition(unequal), PreconditionError);
}

TEST_CASE("query_lower_bound") {
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto nn = static_cast<std::int64_t>(n);
        CHECK(query_lower_bound(equal_shares(n)) == Rational(nn * (nn - 1), 2));
    }
    CHECK(query_lower_bound(generic_entitlements(4, default_generic_scale(4))) == Rational(14));
    CHECK(query_lower_bound({Rational(1)}) == Rational(0));
    CHECK(query_lower_bound(Qs({"1/4", "1/4", "1/2"})) == Rational(4));
}

TEST_CASE("decision algorithms agree with enumeration on random instances") {
    RandomInstanceGenerator gen(kPropertySeed + 3);
    int with_exists = 0;
    for (int trial = 0; trial < kRandomInstances; ++trial) {
        const Instance inst = gen.next();
        const std::size_t n = inst.size();
        CAPTURE(trial);
        Oracle g(inst);
        const Decision d = decide_general(g);
        CHECK(d.exists == exists_by_enumeration(inst, Mode::strong));
        with_exists += d.exists ? 1 : 0;
        CHECK(d.queries.total() <= n << (n - 1));
        if (!any_unreachable(inst, inst.entitlements())) CHECK(d.queries.total() == n << (n - 1));

        Oracle p(inst);
        CHECK(decide_proportional(p).exists == exists_by_enumeration(inst, Mode::proportional));

        const Rational z = gen.unit_rational() / Rational(4);
        if (z > Rational(0)) {
            Oracle pz(inst);
            const Decision dz = decide_plus_z(pz, z);
            CHECK(dz.exists == exists_by_enumeration(inst, Mode::plus_z, z));
            // Raising the bar never creates an allocation.
            if (dz.exists) CHECK(d.exists);
        }

        if (inst.all_hungry() && inst.equal_entitlements()) {
            Oracle h(inst);
            const Decision dh = decide_hungry_equal(h);
            CHECK(dh.exists == d.exists);
            CHECK(dh.queries.total() <= n * (n - 1));
            if (!dh.exists) CHECK(dh.queries.total() == n * (n - 1));
        }

        if (inst.equal_entitlements()) {
            Oracle a(inst), b(inst);
            const bool nec = necessary_condition(a);
            const bool suf = sufficient_condition(b);
            if (suf) CHECK(d.exists);
            if (d.exists) CHECK(nec);
        }
    }
    CHECK(with_exists > 0);
}

TEST_CASE("the best-mark table never beats a longer chain") {
    RandomInstanceGenerator gen(kPropertySeed + 4);
    for (int trial = 0; trial < 100; ++trial) {
        const Instance inst = gen.next();
        Oracle o(inst);
        const BestMarkTable t = best_mark_table(o, inst.entitlements(), MarkSide::right);
        for (AgentSet set = 1; set <= full_set(inst.size()); ++set) {
            for (AgentId i = 0; i < inst.size(); ++i) {
                if (contains(set, i)) CHECK(t.best(set & ~(AgentSet{1} << i)) <= t.best(set));
            }
            if (t.best(set).reachable()) {
                // The recovered order replays to the table entry.
                Rational x(0);
                for (AgentId i : t.order(set)) x = inst.valuation(i).right_mark(x, inst.entitlements()[i]).point();
                CHECK(x == t.best(set).point());
                CHECK(t.chain(set).back() == t.best(set).point());
            }
        }
        // No order of all agents ends before the table's best.
        std::vector<AgentId> order(inst.size());
        std::iota(order.begin(), order.end(), AgentId{0});
        do {
            CHECK(t.best(full_set(inst.size())) <= mark_chain(inst, order, inst.entitlements(), MarkSide::right).end);
        } while (std::next_permutation(order.begin(), order.end()));
    }
}

TEST_CASE("mode names") {
    CHECK(to_string(Mode::strong) == "strong");
    CHECK(to_string(Mode::proportional) == "proportional");
    CHECK(to_string(Mode::plus_z) == "plus_z");
}
