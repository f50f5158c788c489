#pragma once

#include <algorithm>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "staircase/monomial.hpp"

namespace staircase {

// A monomial ideal in two variables, represented by its unique minimal
// generating set: a divisibility antichain held with x strictly ascending
// (hence y strictly descending) -- the corners of the staircase.
//
// Values are immutable after construction, so they are safe to share
// across threads.
class monomial_ideal {
 public:
    // Minimalizes: keeps only divisibility-minimal elements, canonically
    // ordered. Throws domain_error on empty input.
    explicit monomial_ideal(std::vector<monomial> ms) {
        if (ms.empty())
            throw domain_error("a monomial ideal needs at least one generator");
        std::sort(ms.begin(), ms.end());
        for (std::size_t i = 0; i < ms.size(); ++i) {
            if (i > 0 && ms[i].x == ms[i - 1].x) continue;  // larger y, same x
            if (!gens_.empty() && gens_.back().y <= ms[i].y) continue;
            gens_.push_back(ms[i]);
        }
    }

    monomial_ideal(std::initializer_list<monomial> ms)
        : monomial_ideal(std::vector<monomial>(ms)) {}

    std::span<const monomial> generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }

    bool is_unit() const { return gens_.front() == monomial{}; }

    bool contains(monomial m) const {
        // Generators with x <= m.x sit at the front; the last of them has
        // the least y among them.
        auto it = std::upper_bound(
            gens_.begin(), gens_.end(), m.x,
            [](exp_t v, const monomial& g) { return v < g.x; });
        if (it == gens_.begin()) return false;
        return std::prev(it)->y <= m.y;
    }

    // Structural equality of canonical generator sequences.
    friend bool operator==(const monomial_ideal&, const monomial_ideal&) = default;

 private:
    std::vector<monomial> gens_;
};

inline monomial_ideal unit_ideal() { return monomial_ideal{monomial{0, 0}}; }

inline monomial_ideal minimalize(std::vector<monomial> ms) {
    return monomial_ideal(std::move(ms));
}

inline monomial_ideal sum(const monomial_ideal& I, const monomial_ideal& L) {
    std::vector<monomial> ms(I.generators().begin(), I.generators().end());
    ms.insert(ms.end(), L.generators().begin(), L.generators().end());
    return monomial_ideal(std::move(ms));
}

inline monomial_ideal product(const monomial_ideal& I, const monomial_ideal& L) {
    std::vector<monomial> ms;
    ms.reserve(I.size() * L.size());
    for (monomial m : I.generators())
        for (monomial n : L.generators()) ms.push_back(m * n);
    return monomial_ideal(std::move(ms));
}

// power(I, 0) is the unit ideal. Repeated squaring on minimalized
// intermediates; generator counts stay small for staircases.
inline monomial_ideal power(const monomial_ideal& I, exp_t k) {
    monomial_ideal result = unit_ideal();
    monomial_ideal base = I;
    while (k > 0) {
        if (k & 1) result = product(result, base);
        k >>= 1;
        if (k > 0) base = product(base, base);
    }
    return result;
}

// Scales every generator by t; divisibility order is preserved, so the
// result is the antichain of the scaled generators.
inline monomial_ideal bracket_power(const monomial_ideal& I, exp_t t) {
    if (t == 0) throw domain_error("bracket power wants t >= 1");
    std::vector<monomial> ms;
    ms.reserve(I.size());
    for (monomial m : I.generators()) ms.push_back(pow(m, t));
    return monomial_ideal(std::move(ms));
}

inline monomial_ideal intersection(const monomial_ideal& I, const monomial_ideal& L) {
    std::vector<monomial> ms;
    ms.reserve(I.size() * L.size());
    for (monomial m : I.generators())
        for (monomial n : L.generators()) ms.push_back(lcm(m, n));
    return monomial_ideal(std::move(ms));
}

}  // namespace staircase
