#include "cake/fixtures.hpp"

#include <algorithm>

#include "cake/errors.hpp"
#include "cake/subsets.hpp"

namespace cake {

namespace {

const Rational kZero{0};
const Rational kOne{1};

Rational integer(std::size_t v) { return Rational(static_cast<std::int64_t>(v)); }

std::vector<Rational> equal_shares(std::size_t n) {
    return std::vector<Rational>(n, Rational(1, static_cast<std::int64_t>(n)));
}

std::vector<Rational> weights(std::initializer_list<std::int64_t> values) {
    std::vector<Rational> out;
    for (std::int64_t v : values) out.emplace_back(v);
    return out;
}

// A piecewise-linear cumulative profile on the unit interval, from (0,0) to (1,1).
struct Knot {
    Rational x;
    Rational y;
};

std::vector<Knot> identity_knots(const std::vector<Rational>& marks) {
    std::vector<Rational> xs = marks;
    xs.push_back(kZero);
    xs.push_back(kOne);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<Knot> knots;
    for (const Rational& x : xs) knots.push_back({x, x});
    return knots;
}

struct ResolvedPerturbation {
    std::vector<Knot> knots;
    Thm3Perturbation target;
};

// Knots at every subset sum and every extra mark, with the target's
// subset-sum mark moved right by the shift.
ResolvedPerturbation perturbed_knots(const std::vector<Rational>& w, const Thm3Perturbation& target,
                                     const std::vector<Rational>& extra_marks, bool default_from_gap) {
    const std::size_t n = w.size();
    if (!is_generic(w)) throw PreconditionError("entitlements are not generic: two agent subsets share a sum");
    if (target.agent >= n) throw PreconditionError("perturbed agent out of range");

    std::vector<std::pair<Rational, AgentSet>> ranked;
    const std::vector<Rational> sums = subset_sums(w);
    for (AgentSet set = 0; set < sums.size(); ++set) ranked.emplace_back(sums[set], set);
    std::sort(ranked.begin(), ranked.end());
    if (target.subset_rank == 0 || target.subset_rank + 1 >= ranked.size()) {
        throw PreconditionError("perturbation subset must be non-empty and proper");
    }
    const auto& [mark, set] = ranked[target.subset_rank];
    if (contains(set, target.agent)) throw PreconditionError("perturbed agent must not belong to the marked subset");
    if (std::find(extra_marks.begin(), extra_marks.end(), mark) != extra_marks.end()) {
        throw PreconditionError("perturbed mark coincides with a fixed mark");
    }

    std::vector<Rational> marks(sums.begin(), sums.end());
    marks.insert(marks.end(), extra_marks.begin(), extra_marks.end());
    std::vector<Knot> knots = identity_knots(marks);
    const auto at = std::find_if(knots.begin(), knots.end(), [&](const Knot& k) { return k.x == mark; });
    const Rational gap = min_subset_gap(w);
    const Rational room = std::next(at)->x - mark;

    Thm3Perturbation resolved = target;
    if (!resolved.shift) resolved.shift = (default_from_gap ? min(gap, room) : gap) / Rational(4);
    const Rational& shift = *resolved.shift;
    if (shift <= kZero || shift >= gap / Rational(2) || shift >= room) {
        throw PreconditionError("shift must lie in (0, d/2) and before the next fixed mark");
    }
    at->x = mark + shift;
    return {std::move(knots), std::move(resolved)};
}

Thm3Perturbation first_target(const std::vector<Rational>& w, const std::vector<Rational>& extra_marks) {
    std::vector<std::pair<Rational, AgentSet>> ranked;
    const std::vector<Rational> sums = subset_sums(w);
    for (AgentSet set = 0; set < sums.size(); ++set) ranked.emplace_back(sums[set], set);
    std::sort(ranked.begin(), ranked.end());
    for (std::size_t rank = 1; rank + 1 < ranked.size(); ++rank) {
        const auto& [mark, set] = ranked[rank];
        if (contains(set, 0)) continue;
        if (std::find(extra_marks.begin(), extra_marks.end(), mark) != extra_marks.end()) continue;
        return Thm3Perturbation{0, rank, std::nullopt};
    }
    throw PreconditionError("no subset sum available to perturb");
}

// Segments of a profile squeezed into width `stretch` and scaled to `worth`,
// with `gap_segment` inserted at each interior fixed mark in `breaks`.
void append_profile(std::vector<Segment>& out, const std::vector<Knot>& knots, const Rational& stretch,
                    const Rational& worth, const std::vector<Rational>& breaks, const Segment& gap_segment) {
    for (std::size_t j = 0; j + 1 < knots.size(); ++j) {
        if (j > 0 && std::find(breaks.begin(), breaks.end(), knots[j].x) != breaks.end()) out.push_back(gap_segment);
        out.push_back({(knots[j + 1].x - knots[j].x) * stretch, (knots[j + 1].y - knots[j].y) * worth});
    }
}

std::vector<Rational> part_boundaries(std::size_t parts) {
    std::vector<Rational> out;
    for (std::size_t t = 1; t < parts; ++t) out.emplace_back(static_cast<std::int64_t>(t), static_cast<std::int64_t>(parts));
    return out;
}

}  // namespace

Instance uniform_instance(std::size_t n) {
    if (n == 0) throw PreconditionError("need at least one agent");
    return Instance(std::vector<Valuation>(n, Valuation::uniform()), equal_shares(n));
}

Instance gen_example(int k) {
    std::vector<Rational> alice, bob, chana;
    Rational scale;
    switch (k) {
        case 1:
            alice = weights({9, 0, 0, 0, 9, 0, 0, 0, 0, 0, 9});
            bob = weights({1, 4, 4, 3, 1, 5, 1, 1, 2, 4, 1});
            chana = weights({1, 8, 2, 2, 1, 1, 1, 2, 4, 4, 1});
            scale = Rational(27);
            break;
        case 2:
            alice = weights({9, 0, 0, 0, 9, 0, 0, 0, 0, 0, 9});
            bob = weights({1, 4, 4, 3, 1, 5, 5, 1, 1, 1, 1});
            chana = weights({1, 8, 2, 2, 1, 1, 1, 2, 4, 4, 1});
            scale = Rational(27);
            break;
        case 3:
            alice = weights({4, 2, 2, 1, 3});
            bob = weights({4, 0, 2, 2, 4});
            chana = weights({4, 0, 2, 2, 4});
            scale = Rational(12);
            break;
        default: throw PreconditionError("example must be 1, 2 or 3");
    }
    Instance inst({Valuation::from_weights(alice), Valuation::from_weights(bob), Valuation::from_weights(chana)},
                  equal_shares(3), {"Alice", "Bob", "Chana"});
    return inst.with_scales({scale, scale, scale});
}

std::vector<Rational> generic_entitlements(std::size_t n, const Rational& scale) {
    if (n == 0) throw PreconditionError("need at least one agent");
    const Rational denom = integer(n) * scale + Rational::pow2(static_cast<unsigned>(n)) - kOne;
    std::vector<Rational> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back((scale + Rational::pow2(static_cast<unsigned>(i))) / denom);
    return out;
}

Rational default_generic_scale(std::size_t n) {
    return Rational::pow2(static_cast<unsigned>(n + 1)) * integer((n + 1) * (n + 1));
}

Thm3Perturbation default_thm3_perturbation(const std::vector<Rational>& entitlements) {
    return first_target(entitlements, {});
}

Instance gen_thm3(std::size_t n, std::optional<std::vector<Rational>> entitlements,
                  std::optional<Thm3Perturbation> perturbation) {
    std::vector<Rational> w = entitlements ? *entitlements : generic_entitlements(n, default_generic_scale(n));
    if (w.size() != n) throw PreconditionError("entitlement count does not match n");
    if (!is_generic(w)) throw PreconditionError("entitlements are not generic: two agent subsets share a sum");

    std::vector<Valuation> vals(n, Valuation::uniform());
    if (perturbation) {
        const ResolvedPerturbation p = perturbed_knots(w, *perturbation, {}, false);
        std::vector<Segment> segs;
        append_profile(segs, p.knots, kOne, kOne, {}, {});
        vals[p.target.agent] = Valuation(std::move(segs));
    }
    return Instance(std::move(vals), std::move(w));
}

Thm5Parameters thm5_parameters(std::size_t n, std::optional<Rational> scale) {
    if (n < 3) throw PreconditionError("thm5 construction needs n >= 3");
    const Rational floor_scale = Rational::pow2(static_cast<unsigned>(n)) * integer(n * n);
    Thm5Parameters p;
    p.n = n;
    p.scale = scale ? *scale : floor_scale;
    if (p.scale < floor_scale) throw PreconditionError("thm5 construction needs M >= 2^n n^2");
    p.reduced = generic_entitlements(n - 1, p.scale);
    for (const Rational& w : p.reduced) p.a.push_back(kOne / (integer(n) * w));
    return p;
}

Instance gen_thm5(std::size_t n, std::optional<Rational> scale, bool perturbed) {
    const Thm5Parameters p = thm5_parameters(n, scale);
    const Rational part(1, static_cast<std::int64_t>(2 * n - 1));
    const Segment blank{part, kZero};
    const std::vector<Rational> breaks = part_boundaries(n - 2);

    std::vector<Valuation> vals;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<Knot> knots = identity_knots(breaks);
        if (perturbed && i == 0) knots = perturbed_knots(p.reduced, first_target(p.reduced, breaks), breaks, true).knots;
        std::vector<Segment> segs{blank};
        append_profile(segs, knots, part * integer(n - 2), p.a[i], breaks, blank);
        segs.push_back(blank);
        segs.push_back({part, kOne - p.a[i]});
        segs.push_back(blank);
        vals.emplace_back(std::move(segs));
    }
    std::vector<Segment> last;
    for (std::size_t j = 1; j <= 2 * n - 1; ++j) last.push_back({part, j % 2 == 1 ? Rational(1, static_cast<std::int64_t>(n)) : kZero});
    vals.emplace_back(std::move(last));
    return Instance(std::move(vals), equal_shares(n));
}

Thm11Parameters thm11_parameters(std::size_t n, const Rational& z, std::optional<Rational> scale) {
    if (n < 3) throw PreconditionError("thm11 construction needs n >= 3");
    const Rational nn = integer(n);
    const Rational cap = kOne / (nn * (nn - kOne));
    if (z <= kZero || z >= cap) throw PreconditionError("thm11 construction needs 0 < z < 1/(n(n-1))");

    Thm11Parameters p;
    p.n = n;
    p.z = z;
    p.epsilon = min(cap - z, nn * z / (nn - kOne));
    const Rational centre = kOne / (nn - kOne);
    const auto sandwiched = [&](const Rational& m) {
        for (const Rational& w : generic_entitlements(n - 1, m)) {
            if (!(centre - p.epsilon < w && w < centre + p.epsilon)) return false;
        }
        return true;
    };
    const Rational floor_scale = Rational::pow2(static_cast<unsigned>(n));
    if (scale) {
        if (*scale < floor_scale || !sandwiched(*scale)) {
            throw PreconditionError("thm11 construction needs M >= 2^n with every w'_i within epsilon of 1/(n-1)");
        }
        p.scale = *scale;
    } else {
        p.scale = floor_scale;
        while (!sandwiched(p.scale)) p.scale *= Rational(2);
    }
    p.reduced = generic_entitlements(n - 1, p.scale);
    for (const Rational& w : p.reduced) p.a.push_back((kOne / nn + z) / w);
    return p;
}

Instance gen_thm11(std::size_t n, const Rational& z, std::optional<Rational> scale, bool perturbed) {
    const Thm11Parameters p = thm11_parameters(n, z, scale);
    const Rational half(1, 2);
    const Rational share = kOne / integer(n);

    std::vector<Valuation> vals;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<Knot> knots = identity_knots({});
        if (perturbed && i == 0) knots = perturbed_knots(p.reduced, first_target(p.reduced, {}), {}, true).knots;
        std::vector<Segment> segs;
        append_profile(segs, knots, half, p.a[i], {}, {});
        segs.push_back({half, kOne - p.a[i]});
        vals.emplace_back(std::move(segs));
    }
    vals.emplace_back(std::vector<Segment>{{half, kOne - share - z}, {half, share + z}});
    return Instance(std::move(vals), equal_shares(n));
}

std::string to_string(Family family) {
    switch (family) {
        case Family::example: return "example";
        case Family::thm3: return "thm3";
        case Family::thm5: return "thm5";
        case Family::thm11: return "thm11";
    }
    return "unknown";
}

Family parse_family(const std::string& name) {
    if (name == "example") return Family::example;
    if (name == "thm3") return Family::thm3;
    if (name == "thm5") return Family::thm5;
    if (name == "thm11") return Family::thm11;
    throw PreconditionError("unknown family '" + name + "' (expected example, thm3, thm5 or thm11)");
}

Generated generate(const FamilyParams& params) {
    FamilyParams resolved = params;
    switch (params.family) {
        case Family::example: {
            Instance inst = gen_example(params.example);
            resolved.n = inst.size();
            return {std::move(inst), resolved};
        }
        case Family::thm3: {
            if (!resolved.scale) resolved.scale = default_generic_scale(params.n);
            const std::vector<Rational> w = generic_entitlements(params.n, *resolved.scale);
            std::optional<Thm3Perturbation> target;
            if (params.perturbed) {
                target = params.target ? *params.target : default_thm3_perturbation(w);
                resolved.target = perturbed_knots(w, *target, {}, false).target;
            }
            return {gen_thm3(params.n, w, resolved.target), resolved};
        }
        case Family::thm5: {
            resolved.scale = thm5_parameters(params.n, params.scale).scale;
            return {gen_thm5(params.n, resolved.scale, params.perturbed), resolved};
        }
        case Family::thm11: {
            if (!params.z) throw PreconditionError("thm11 needs z");
            resolved.scale = thm11_parameters(params.n, *params.z, params.scale).scale;
            return {gen_thm11(params.n, *params.z, resolved.scale, params.perturbed), resolved};
        }
    }
    throw PreconditionError("unknown family");
}

}  // namespace cake
