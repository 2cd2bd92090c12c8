#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cake/model.hpp"

namespace cake {

// n agents, uniform valuations, equal entitlements.
Instance uniform_instance(std::size_t n);

// The three 3-agent worked examples (Alice, Bob, Chana), k in {1, 2, 3}.
Instance gen_example(int k);

// w'_i = (M + 2^(i-1)) / (n M + 2^n - 1), i = 1..n. Generic whenever M > 2^n - 1.
std::vector<Rational> generic_entitlements(std::size_t n, const Rational& scale);
// Scale used when none is given: 2^(n+1) (n+1)^2.
Rational default_generic_scale(std::size_t n);

// Moves one agent's w_N-mark from w_N to w_N + shift, where N is the
// subset with the `subset_rank`-th smallest sum (rank 0 is the empty set).
struct Thm3Perturbation {
    AgentId agent = 0;
    std::size_t subset_rank = 0;
    std::optional<Rational> shift;  // default: a quarter of the smallest subset-sum gap
};

// Uniform agents with generic entitlements (generic_entitlements(n) when
// none are given). With a perturbation, the perturbed agent's valuation is
// uniform between its marks at every subset sum, except that its w_N-mark
// sits at w_N + shift. Throws PreconditionError on non-generic entitlements,
// an agent inside N, an empty or full N, or a shift outside (0, d/2).
Instance gen_thm3(std::size_t n, std::optional<std::vector<Rational>> entitlements = std::nullopt,
                  std::optional<Thm3Perturbation> perturbation = std::nullopt);

// First valid target for agent 0: the smallest non-empty subset sum excluding it.
Thm3Perturbation default_thm3_perturbation(const std::vector<Rational>& entitlements);

struct Thm5Parameters {
    std::size_t n = 0;
    Rational scale;                    // M
    std::vector<Rational> reduced;     // w'_i, i = 1..n-1
    std::vector<Rational> a;           // a_i = 1 / (n w'_i)
};

// Requires n >= 3 and M >= 2^n n^2.
Thm5Parameters thm5_parameters(std::size_t n, std::optional<Rational> scale = std::nullopt);

// 2n-1 equal parts. Odd parts are worth 1/n each to agent n-1 and nothing to
// the others; agent i < n-1 values the even parts 2..2n-4 at a_i/(n-2) each
// and part 2n-2 at 1-a_i. Equal entitlements. The perturbed variant moves
// one w'_N-mark of agent 0 inside its valuable parts so that a connected
// strongly-proportional allocation exists.
Instance gen_thm5(std::size_t n, std::optional<Rational> scale = std::nullopt, bool perturbed = false);

struct Thm11Parameters {
    std::size_t n = 0;
    Rational z;
    Rational epsilon;                  // min{1/(n(n-1)) - z, nz/(n-1)}
    Rational scale;                    // M
    std::vector<Rational> reduced;     // w'_i
    std::vector<Rational> a;           // a_i = (1/n + z) / w'_i
};

// Requires n >= 3 and 0 < z < 1/(n(n-1)). Without a scale, picks the least
// power of two M >= 2^n with |w'_i - 1/(n-1)| < epsilon for every i.
Thm11Parameters thm11_parameters(std::size_t n, const Rational& z, std::optional<Rational> scale = std::nullopt);

// Two equal parts. Agent i < n-1: a_i then 1-a_i; agent n-1: 1-1/n-z then 1/n+z.
// The perturbed variant moves one w'_N-mark of agent 0 inside the left part.
Instance gen_thm11(std::size_t n, const Rational& z, std::optional<Rational> scale = std::nullopt,
                   bool perturbed = false);

// Every family behind one descriptor, for the command line and provenance.
enum class Family { example, thm3, thm5, thm11 };

struct FamilyParams {
    Family family = Family::example;
    int example = 1;
    std::size_t n = 3;
    bool perturbed = false;
    std::optional<Rational> scale;
    std::optional<Rational> z;
    std::optional<Thm3Perturbation> target;
};

struct Generated {
    Instance instance;
    FamilyParams params;  // defaults resolved
};

Generated generate(const FamilyParams& params);
std::string to_string(Family family);
Family parse_family(const std::string& name);

}  // namespace cake
