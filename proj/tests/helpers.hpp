#pragma once

#include <doctest.h>

#include <string>
#include <vector>

#include "cake/model.hpp"
#include "cake/random_instance.hpp"

namespace cake::test {

inline Rational Q(const std::string& text) { return Rational::parse(text); }

inline std::vector<Rational> Qs(std::initializer_list<const char*> texts) {
    std::vector<Rational> out;
    for (const char* t : texts) out.push_back(Q(t));
    return out;
}

inline std::vector<Rational> equal_shares(std::size_t n) {
    return std::vector<Rational>(n, Rational(1, static_cast<std::int64_t>(n)));
}

inline Valuation weighted(std::initializer_list<std::int64_t> weights) {
    std::vector<Rational> w(weights.begin(), weights.end());
    return Valuation::from_weights(w);
}

// Two regions of width 1/2 with values v and 1 - v.
inline Valuation halves(const Rational& v) { return Valuation({{Q("1/2"), v}, {Q("1/2"), Rational(1) - v}}); }

inline Valuation bob1() { return weighted({1, 4, 4, 3, 1, 5, 1, 1, 2, 4, 1}); }
inline Valuation chana() { return weighted({1, 8, 2, 2, 1, 1, 1, 2, 4, 4, 1}); }

// Bob and Chana of the first worked example, alone with equal shares.
inline Instance bob_chana() { return Instance({bob1(), chana()}, equal_shares(2)); }

inline constexpr std::uint64_t kPropertySeed = 20240917;
inline constexpr int kRandomInstances = 250;

}  // namespace cake::test
