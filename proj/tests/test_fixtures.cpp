#include "helpers.hpp"

#include "cake/brute_force.hpp"
#include "cake/decision.hpp"
#include "cake/errors.hpp"
#include "cake/fixtures.hpp"

using namespace cake;
using namespace cake::test;

namespace {

Rational sum(const std::vector<Rational>& v) {
    Rational s;
    for (const Rational& q : v) s += q;
    return s;
}

bool general(const Instance& inst) {
    Oracle o(inst);
    return decide_general(o).exists;
}

}  // namespace

TEST_CASE("worked examples") {
    const Instance ex1 = gen_example(1);
    CHECK(ex1.size() == 3);
    CHECK(ex1.valuation(0).segments().size() == 11);
    CHECK(ex1.valuation(1).value_of(Q("5/11"), Q("6/11")) == Q("5/27"));
    CHECK(gen_example(2).valuation(1).value_of(Q("6/11"), Q("7/11")) == Q("5/27"));
    CHECK(gen_example(3).valuation(0).segments().size() == 5);
    CHECK(gen_example(3).valuation(1) == gen_example(3).valuation(2));
    CHECK(ex1.scales()[0] == Rational(27));
    CHECK_THROWS_AS(gen_example(4), PreconditionError);
}

TEST_CASE("generic entitlements") {
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto w = generic_entitlements(n, default_generic_scale(n));
        CHECK(sum(w) == Rational(1));
        CHECK(is_generic(w));
        CHECK(query_lower_bound(w) ==
              Rational(static_cast<std::int64_t>(n) * ((std::int64_t{1} << (n - 1)) - 1), 2));
    }
    CHECK(default_generic_scale(3) == Rational(16 * 16));
    CHECK_FALSE(is_generic(equal_shares(3)));
}

TEST_CASE("thm3 family") {
    for (std::size_t n = 2; n <= 5; ++n) {
        CAPTURE(n);
        const Instance base = gen_thm3(n);
        CHECK(is_generic(base.entitlements()));
        CHECK_FALSE(general(base));
        CHECK_FALSE(exists_by_enumeration(base, Mode::strong));
        const auto w = base.entitlements();
        const Thm3Perturbation t = default_thm3_perturbation(w);
        const Instance pert = gen_thm3(n, w, t);
        CHECK(general(pert));
        CHECK(exists_by_enumeration(pert, Mode::strong));
        // Only the perturbed agent changes, and only locally.
        for (AgentId i = 1; i < n; ++i) CHECK(pert.valuation(i) == base.valuation(i));
    }
    // Every valid target yields existence at n = 3.
    const auto w = generic_entitlements(3, default_generic_scale(3));
    const auto sums = subset_sums(w);
    int targets = 0;
    for (AgentId agent = 0; agent < 3; ++agent) {
        for (std::size_t rank = 1; rank + 1 < sums.size(); ++rank) {
            Thm3Perturbation t{agent, rank, std::nullopt};
            try {
                const Instance inst = gen_thm3(3, w, t);
                CHECK(exists_by_enumeration(inst, Mode::strong));
                ++targets;
            } catch (const PreconditionError&) {
                // rank names a subset containing the agent
            }
        }
    }
    CHECK(targets == 9);
    CHECK_THROWS_AS(gen_thm3(3, equal_shares(3)), PreconditionError);
    CHECK_THROWS_AS(gen_thm3(3, w, Thm3Perturbation{0, 1, Rational(1)}), PreconditionError);
}

TEST_CASE("thm5 family") {
    const Thm5Parameters p3 = thm5_parameters(3);
    CHECK(p3.scale == Rational(72));
    for (std::size_t n = 3; n <= 6; ++n) {
        CAPTURE(n);
        const Thm5Parameters p = thm5_parameters(n);
        CHECK(sum(p.reduced) == Rational(1));
        CHECK(is_generic(p.reduced));
        const Rational n2(static_cast<std::int64_t>(n) - 2);
        for (const Rational& a : p.a) CHECK(a / n2 > Rational(1) - a);
        const Instance base = gen_thm5(n);
        CHECK(base.valuation(0).segments().size() == 2 * n - 1);
        CHECK(base.equal_entitlements());
        CHECK_FALSE(general(base));
        const Instance pert = gen_thm5(n, std::nullopt, true);
        CHECK(general(pert));
        if (n <= 5) {
            CHECK_FALSE(exists_by_enumeration(base, Mode::strong));
            CHECK(exists_by_enumeration(pert, Mode::strong));
        }
    }
    CHECK_THROWS_AS(thm5_parameters(2), PreconditionError);
    CHECK_THROWS_AS(thm5_parameters(3, Rational(71)), PreconditionError);
}

TEST_CASE("thm11 family") {
    const Thm11Parameters p = thm11_parameters(3, Q("1/12"));
    CHECK(p.epsilon == Q("1/12"));
    CHECK(p.scale == Rational(8));
    for (std::size_t n = 3; n <= 5; ++n) {
        const Rational z = Rational(1, static_cast<std::int64_t>(2 * n * (n - 1)));
        const Thm11Parameters q = thm11_parameters(n, z);
        const Rational share = Rational(1, static_cast<std::int64_t>(n)) + z;
        CAPTURE(n);
        CHECK(sum(q.reduced) == Rational(1));
        CHECK(is_generic(q.reduced));
        for (const Rational& a : q.a) {
            CHECK(a < Rational(1));
            CHECK(Rational(1) - a < share);
        }
        const Instance base = gen_thm11(n, z);
        CHECK(base.valuation(0).segments().size() == 2);
        Oracle o(base);
        CHECK_FALSE(decide_plus_z(o, z).exists);
        CHECK_FALSE(exists_by_enumeration(base, Mode::plus_z, z));
        const Instance pert = gen_thm11(n, z, std::nullopt, true);
        Oracle op(pert);
        CHECK(decide_plus_z(op, z).exists);
        CHECK(exists_by_enumeration(pert, Mode::plus_z, z));
    }
    CHECK_THROWS_AS(thm11_parameters(3, Rational(0)), PreconditionError);
    CHECK_THROWS_AS(thm11_parameters(3, Q("1/6")), PreconditionError);
    CHECK_THROWS_AS(thm11_parameters(3, Q("1/12"), Rational(4)), PreconditionError);
}

TEST_CASE("family dispatch") {
    FamilyParams p;
    p.family = Family::thm5;
    p.n = 3;
    const Generated g = generate(p);
    CHECK(g.instance == gen_thm5(3));
    CHECK(g.params.scale == Rational(72));
    CHECK(parse_family("thm11") == Family::thm11);
    CHECK(to_string(Family::example) == "example");
    CHECK_THROWS_AS(parse_family("nine"), PreconditionError);
    FamilyParams bad;
    bad.family = Family::thm11;
    CHECK_THROWS_AS(generate(bad), PreconditionError);  // needs z
}
