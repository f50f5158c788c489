#pragma once

#include <algorithm>
#include <compare>

#include "staircase/checked.hpp"

namespace staircase {

// A monomial in two variables, stored as its exponent pair.
// The default ordering (x ascending, then y) is the canonical generator
// order used throughout.
struct monomial {
    exp_t x = 0;
    exp_t y = 0;

    friend bool operator==(const monomial&, const monomial&) = default;
    friend auto operator<=>(const monomial&, const monomial&) = default;
};

inline bool divides(monomial m, monomial n) {
    return m.x <= n.x && m.y <= n.y;
}

inline monomial operator*(monomial m, monomial n) {
    return {checked_add(m.x, n.x), checked_add(m.y, n.y)};
}

inline monomial lcm(monomial m, monomial n) {
    return {std::max(m.x, n.x), std::max(m.y, n.y)};
}

inline monomial pow(monomial m, exp_t t) {
    return {checked_mul(m.x, t), checked_mul(m.y, t)};
}

}  // namespace staircase
