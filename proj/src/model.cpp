#include "cake/model.hpp"

#include <algorithm>

#include "cake/errors.hpp"

namespace cake {

namespace {

const Rational kZero{0};
const Rational kOne{1};

void require_unit(const Rational& x, const char* what) {
    if (x < kZero || x > kOne) throw DomainError(std::string(what) + " outside [0,1]: " + x.to_string());
}

}  // namespace

const Rational& MarkResult::point() const {
    if (!point_) throw DomainError("mark result is unreachable");
    return *point_;
}

Valuation::Valuation(std::vector<Segment> segments) : segments_(std::move(segments)) {
    if (segments_.empty()) throw InvalidInstance("valuation needs at least one segment");
    Rational width_sum, value_sum;
    starts_.reserve(segments_.size());
    below_.reserve(segments_.size());
    for (const Segment& s : segments_) {
        if (s.width <= kZero) throw InvalidInstance("segment width must be positive, got " + s.width.to_string());
        if (s.value < kZero) throw InvalidInstance("segment value must be non-negative, got " + s.value.to_string());
        starts_.push_back(width_sum);
        below_.push_back(value_sum);
        width_sum += s.width;
        value_sum += s.value;
    }
    if (width_sum != kOne) throw InvalidInstance("segment widths sum to " + width_sum.to_string() + ", not 1");
    if (value_sum != kOne) throw InvalidInstance("segment values sum to " + value_sum.to_string() + ", not 1");
}

Valuation Valuation::uniform() { return Valuation({Segment{kOne, kOne}}); }

Valuation Valuation::from_weights(const std::vector<Rational>& weights) {
    if (weights.empty()) throw InvalidInstance("no region weights");
    Rational total;
    for (const Rational& w : weights) total += w;
    if (total <= kZero) throw InvalidInstance("region weights must have a positive sum");
    const Rational width(1, static_cast<std::int64_t>(weights.size()));
    std::vector<Segment> segs;
    segs.reserve(weights.size());
    for (const Rational& w : weights) segs.push_back({width, w / total});
    return Valuation(std::move(segs));
}

bool Valuation::hungry() const {
    return std::all_of(segments_.begin(), segments_.end(), [](const Segment& s) { return s.value > kZero; });
}

Rational Valuation::cumulative(const Rational& x) const {
    require_unit(x, "point");
    if (x == kOne) return kOne;
    const auto it = std::upper_bound(starts_.begin(), starts_.end(), x);
    const auto idx = static_cast<std::size_t>(it - starts_.begin()) - 1;
    const Segment& s = segments_[idx];
    return below_[idx] + s.value * (x - starts_[idx]) / s.width;
}

Rational Valuation::value_of(const Rational& a, const Rational& b) const {
    require_unit(a, "interval start");
    require_unit(b, "interval end");
    if (b < a) throw DomainError("interval [" + a.to_string() + ", " + b.to_string() + "] is reversed");
    return cumulative(b) - cumulative(a);
}

MarkResult Valuation::right_mark(const Rational& x, const Rational& r) const {
    require_unit(x, "mark start");
    require_unit(r, "mark value");
    const Rational target = cumulative(x) + r;
    if (target > kOne) return MarkResult::unreachable();
    // First segment whose right end is worth strictly more than target.
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        const Rational above = below_[i] + segments_[i].value;
        if (above > target) {
            return starts_[i] + segments_[i].width * (target - below_[i]) / segments_[i].value;
        }
    }
    return kOne;
}

MarkResult Valuation::left_mark(const Rational& x, const Rational& r) const {
    require_unit(x, "mark start");
    require_unit(r, "mark value");
    if (r == kZero) return x;
    const Rational target = cumulative(x) + r;
    if (target > kOne) return MarkResult::unreachable();
    // First segment whose right end reaches target; its left end is below target.
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        const Rational above = below_[i] + segments_[i].value;
        if (above >= target) {
            return starts_[i] + segments_[i].width * (target - below_[i]) / segments_[i].value;
        }
    }
    return kOne;  // unreachable: target <= 1 is always met by the last segment
}

Valuation Valuation::mirrored() const {
    std::vector<Segment> rev(segments_.rbegin(), segments_.rend());
    return Valuation(std::move(rev));
}

Rational cumulative(const Valuation& v, const Rational& x) { return v.cumulative(x); }
Rational value_of(const Valuation& v, const Rational& a, const Rational& b) { return v.value_of(a, b); }

Instance::Instance(std::vector<Valuation> valuations, std::vector<Rational> entitlements,
                   std::vector<std::string> names)
    : valuations_(std::move(valuations)), entitlements_(std::move(entitlements)), names_(std::move(names)) {
    if (valuations_.empty()) throw InvalidInstance("instance needs at least one agent");
    if (entitlements_.size() != valuations_.size()) {
        throw InvalidInstance("got " + std::to_string(entitlements_.size()) + " entitlements for " +
                              std::to_string(valuations_.size()) + " agents");
    }
    Rational total;
    for (const Rational& w : entitlements_) {
        if (w <= kZero) throw InvalidInstance("entitlement must be positive, got " + w.to_string());
        total += w;
    }
    if (total != kOne) throw InvalidInstance("entitlements sum to " + total.to_string() + ", not 1");
    if (names_.empty()) {
        for (std::size_t i = 0; i < valuations_.size(); ++i) names_.push_back("agent" + std::to_string(i));
    }
    if (names_.size() != valuations_.size()) throw InvalidInstance("agent name count does not match agent count");
    scales_.assign(valuations_.size(), kOne);
}

Instance Instance::with_scales(std::vector<Rational> scales) const {
    if (scales.size() != size()) throw InvalidInstance("scale count does not match agent count");
    for (const Rational& s : scales) {
        if (s <= kZero) throw InvalidInstance("scale must be positive");
    }
    Instance copy = *this;
    copy.scales_ = std::move(scales);
    return copy;
}

bool Instance::equal_entitlements() const {
    const Rational share(1, static_cast<std::int64_t>(size()));
    return std::all_of(entitlements_.begin(), entitlements_.end(), [&](const Rational& w) { return w == share; });
}

bool Instance::all_hungry() const {
    return std::all_of(valuations_.begin(), valuations_.end(), [](const Valuation& v) { return v.hungry(); });
}

bool is_permutation_of(const std::vector<AgentId>& order, std::size_t n) {
    if (order.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (AgentId a : order) {
        if (a >= n || seen[a]) return false;
        seen[a] = true;
    }
    return true;
}

}  // namespace cake
