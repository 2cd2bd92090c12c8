#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cake/rational.hpp"

namespace cake {

using AgentId = std::size_t;

// A homogeneous region of the cake as seen by one agent.
struct Segment {
    Rational width;
    Rational value;

    friend bool operator==(const Segment&, const Segment&) = default;
};

// Result of a mark query: a point of the cake, or unreachable when the
// remaining cake is worth less than the requested amount. Unreachable
// orders after every point.
class MarkResult {
public:
    MarkResult() = default;  // unreachable
    MarkResult(Rational point) : point_(std::move(point)) {}  // NOLINT(google-explicit-constructor)

    static MarkResult unreachable() { return {}; }

    bool reachable() const { return point_.has_value(); }
    // Throws DomainError when unreachable.
    const Rational& point() const;

    std::string to_string() const { return point_ ? point_->to_string() : "inf"; }

    friend bool operator==(const MarkResult&, const MarkResult&) = default;
    friend bool operator<(const MarkResult& a, const MarkResult& b) {
        if (!a.point_) return false;
        if (!b.point_) return true;
        return *a.point_ < *b.point_;
    }
    friend bool operator<=(const MarkResult& a, const MarkResult& b) { return !(b < a); }

private:
    std::optional<Rational> point_;
};

// Piecewise-constant density on [0,1]. Widths and values each sum to exactly 1.
class Valuation {
public:
    // Throws InvalidInstance on a non-positive width, a negative value, or sums != 1.
    explicit Valuation(std::vector<Segment> segments);

    static Valuation uniform();
    // Equal-width regions with the given (possibly unnormalized) weights.
    static Valuation from_weights(const std::vector<Rational>& weights);

    const std::vector<Segment>& segments() const { return segments_; }
    bool hungry() const;

    // F(x) = V([0, x]).
    Rational cumulative(const Rational& x) const;
    // V([a, b]); requires 0 <= a <= b <= 1.
    Rational value_of(const Rational& a, const Rational& b) const;
    // Largest z with V([x, z]) = r, or unreachable when V([x, 1]) < r.
    MarkResult right_mark(const Rational& x, const Rational& r) const;
    // Smallest such z.
    MarkResult left_mark(const Rational& x, const Rational& r) const;

    // Reflected about 1/2: segment list reversed.
    Valuation mirrored() const;

    friend bool operator==(const Valuation& a, const Valuation& b) { return a.segments_ == b.segments_; }

private:
    std::vector<Segment> segments_;
    std::vector<Rational> starts_;  // left end of each segment
    std::vector<Rational> below_;   // F at the left end of each segment
};

// Free-function spellings of the valuation queries.
Rational cumulative(const Valuation& v, const Rational& x);
Rational value_of(const Valuation& v, const Rational& a, const Rational& b);

class Instance {
public:
    // Throws InvalidInstance when sizes mismatch, n == 0, an entitlement is
    // not positive, or the entitlements do not sum to exactly 1.
    Instance(std::vector<Valuation> valuations, std::vector<Rational> entitlements,
             std::vector<std::string> names = {});

    std::size_t size() const { return valuations_.size(); }
    const Valuation& valuation(AgentId i) const { return valuations_.at(i); }
    const std::vector<Valuation>& valuations() const { return valuations_; }
    const std::vector<Rational>& entitlements() const { return entitlements_; }
    const std::vector<std::string>& names() const { return names_; }

    // Multiplier mapping normalized values back to the scale they were loaded
    // at (1 when the input was already normalized).
    const std::vector<Rational>& scales() const { return scales_; }
    Instance with_scales(std::vector<Rational> scales) const;

    bool equal_entitlements() const;
    bool all_hungry() const;

    friend bool operator==(const Instance& a, const Instance& b) {
        return a.valuations_ == b.valuations_ && a.entitlements_ == b.entitlements_;
    }

private:
    std::vector<Valuation> valuations_;
    std::vector<Rational> entitlements_;
    std::vector<std::string> names_;
    std::vector<Rational> scales_;
};

// Agent order[k] receives [cuts[k], cuts[k+1]]. A complete allocation has
// cuts.front() == 0 and cuts.back() == 1; sub-cake divisions span [a, b].
struct Allocation {
    std::vector<Rational> cuts;
    std::vector<AgentId> order;

    std::size_t pieces() const { return order.size(); }
    Rational left(std::size_t k) const { return cuts.at(k); }
    Rational right(std::size_t k) const { return cuts.at(k + 1); }

    friend bool operator==(const Allocation&, const Allocation&) = default;
};

// True iff `order` is a permutation of {0..n-1}.
bool is_permutation_of(const std::vector<AgentId>& order, std::size_t n);

}  // namespace cake
