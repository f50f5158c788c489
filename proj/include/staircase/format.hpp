#pragma once

#include <string>

#include "staircase/equigen.hpp"
#include "staircase/ideal.hpp"

namespace staircase {

inline std::string to_string(monomial m) {
    if (m.x == 0 && m.y == 0) return "1";
    std::string s;
    if (m.x == 1)
        s += "x";
    else if (m.x > 1)
        s += "x^" + std::to_string(m.x);
    if (m.y == 1)
        s += "y";
    else if (m.y > 1)
        s += "y^" + std::to_string(m.y);
    return s;
}

// Generators listed with the x-exponent descending, the way staircases read.
inline std::string to_string(const monomial_ideal& I) {
    std::string s = "(";
    const auto gens = I.generators();
    for (std::size_t i = gens.size(); i-- > 0;) {
        s += to_string(gens[i]);
        if (i > 0) s += ", ";
    }
    return s + ")";
}

// Exponent-pair literal, parseable back by parse_ideal.
inline std::string pair_literal(const monomial_ideal& I) {
    std::string s = "[";
    const auto gens = I.generators();
    for (std::size_t i = gens.size(); i-- > 0;) {
        s += "(" + std::to_string(gens[i].x) + "," + std::to_string(gens[i].y) + ")";
        if (i > 0) s += ",";
    }
    return s + "]";
}

inline std::string to_string(const exponent_set& A) {
    std::string s = "{";
    bool first = true;
    for (exp_t i : A.members.elements()) {
        if (!first) s += ", ";
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

}  // namespace staircase
