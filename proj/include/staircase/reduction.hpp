#pragma once

#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "staircase/ideal.hpp"

namespace staircase {

// Value of the line functional (b*x + a*y) / (a*b) at an exponent point,
// kept unreduced. All comparisons cross-multiply in 128 bits; nothing is
// ever rounded or reduced.
struct nu_value {
    exp_t num = 0;
    exp_t den = 1;

    friend bool operator==(nu_value p, nu_value q) {
        return u128(p.num) * q.den == u128(q.num) * p.den;
    }
    friend std::strong_ordering operator<=>(nu_value p, nu_value q) {
        u128 l = u128(p.num) * q.den, r = u128(q.num) * p.den;
        return l < r ? std::strong_ordering::less
             : l > r ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }
};

inline nu_value nu(exp_t a, exp_t b, monomial m) {
    if (a == 0 || b == 0) throw domain_error("nu wants a, b >= 1");
    return {checked_add(checked_mul(b, m.x), checked_mul(a, m.y)),
            checked_mul(a, b)};
}

inline nu_value nu_one() { return {1, 1}; }

// Exact nonnegative rational, used for strict-region thresholds.
struct rational {
    exp_t num = 1;
    exp_t den = 1;
};

namespace detail {

// b*x + a*y >= a*b, i.e. the point lies on or above the frame line.
inline bool on_or_above_line(exp_t a, exp_t b, monomial m) {
    return u128(b) * m.x + u128(a) * m.y >= u128(a) * b;
}

inline bool on_line(exp_t a, exp_t b, monomial m) {
    return u128(b) * m.x + u128(a) * m.y == u128(a) * b;
}

}  // namespace detail

struct classification {
    exp_t a = 0;  // exponent of the pure x-power generator
    exp_t b = 0;  // exponent of the pure y-power generator
    bool frame_is_reduction = false;   // (x^a, y^b) is the minimal monomial reduction
    bool quasi_equigenerated = false;  // additionally, every generator is on the line
};

// Reads the frame off the pure-power generators. Throws if either pure
// power is absent (the ideal is rejected, never completed).
inline classification classify(const monomial_ideal& I) {
    const auto gens = I.generators();
    const monomial first = gens.front(), last = gens.back();
    if (first.x != 0 || last.y != 0 || first.y == 0 || last.x == 0)
        throw domain_error(
            "expected a proper ideal containing pure powers of both x and y");
    classification c;
    c.a = last.x;
    c.b = first.y;
    c.frame_is_reduction = true;
    c.quasi_equigenerated = true;
    for (monomial m : gens) {
        if (!detail::on_or_above_line(c.a, c.b, m)) c.frame_is_reduction = false;
        if (!detail::on_line(c.a, c.b, m)) c.quasi_equigenerated = false;
    }
    return c;
}

// The generators sitting at vertices of the lower-left convex hull of the
// staircase; collinear interior points are dropped. This is the unique
// minimal monomial reduction.
inline monomial_ideal minimal_monomial_reduction(const monomial_ideal& I) {
    const auto gens = I.generators();
    const monomial first = gens.front(), last = gens.back();
    if (first.x != 0 || last.y != 0 || first.y == 0 || last.x == 0)
        throw domain_error(
            "expected a proper ideal containing pure powers of both x and y");
    auto cross = [](monomial A, monomial B, monomial C) {
        i128 bx = i128(B.x) - i128(A.x), by = i128(B.y) - i128(A.y);
        i128 cx = i128(C.x) - i128(A.x), cy = i128(C.y) - i128(A.y);
        return bx * cy - by * cx;
    };
    std::vector<monomial> hull;
    for (monomial m : gens) {
        // <= 0 also drops points lying on a hull edge: only strict
        // vertices survive.
        while (hull.size() >= 2 &&
               cross(hull[hull.size() - 2], hull[hull.size() - 1], m) <= 0)
            hull.pop_back();
        hull.push_back(m);
    }
    return monomial_ideal(std::move(hull));
}

// An ideal certified to have (x^a, y^b) as its minimal monomial reduction,
// with the frame attached.
class framed_ideal {
 public:
    explicit framed_ideal(monomial_ideal I) : ideal_(std::move(I)) {
        classification c = classify(ideal_);
        if (!c.frame_is_reduction)
            throw domain_error(
                "(x^a, y^b) is not a reduction: some generator lies below the "
                "frame line");
        a_ = c.a;
        b_ = c.b;
        quasi_equigenerated_ = c.quasi_equigenerated;
    }

    const monomial_ideal& ideal() const { return ideal_; }
    exp_t a() const { return a_; }
    exp_t b() const { return b_; }
    bool quasi_equigenerated() const { return quasi_equigenerated_; }
    monomial_ideal frame() const {
        return monomial_ideal{monomial{a_, 0}, monomial{0, b_}};
    }

    friend bool operator==(const framed_ideal&, const framed_ideal&) = default;

 private:
    monomial_ideal ideal_;
    exp_t a_ = 0, b_ = 0;
    bool quasi_equigenerated_ = false;
};

struct reduction_bounds {
    exp_t cold;  // strict upper bound g / gcd(A)
    exp_t glp;   // g / gcd(A) - |A| + 2
};

struct reduction_report {
    exp_t a = 0, b = 0;
    monomial_ideal reduction;  // the frame (x^a, y^b)
    exp_t r = 0;
    exp_t witness_k = 0;  // the k at which I^(k+1) = J * I^k first held (== r)
    std::optional<reduction_bounds> bounds;  // present for quasi-equigenerated input
};

inline exp_t default_reduction_cap(exp_t a, exp_t b) {
    return std::max<exp_t>(2 * std::max(a, b), 64);
}

namespace detail {

inline std::optional<reduction_bounds> equigen_bounds(const framed_ideal& F) {
    if (!F.quasi_equigenerated()) return std::nullopt;
    const exp_t g = std::gcd(F.a(), F.b());
    const exp_t step = F.a() / g;
    exp_t gcd_indices = 0;
    for (monomial m : F.ideal().generators())
        gcd_indices = std::gcd(gcd_indices, m.x / step);
    const exp_t cold = g / gcd_indices;
    const exp_t members = F.ideal().size();
    return reduction_bounds{cold, cold + 2 - members};
}

}  // namespace detail

// Power iteration: the least k >= 0 with I^(k+1) = J * I^k. The cap is a
// guard, not a truncation -- hitting it throws.
inline reduction_report reduction_number(const framed_ideal& F, exp_t cap = 0) {
    if (cap == 0) cap = default_reduction_cap(F.a(), F.b());
    const monomial_ideal J = F.frame();
    monomial_ideal pk = unit_ideal();  // I^k
    for (exp_t k = 0; k <= cap; ++k) {
        monomial_ideal next = product(pk, F.ideal());  // I^(k+1)
        if (next == product(J, pk))
            return {F.a(), F.b(), J, k, k, detail::equigen_bounds(F)};
        pk = std::move(next);
    }
    throw cap_exceeded(cap);
}

namespace detail {

// 0 < x < a, 0 < y < b, on or above the frame line.
inline bool in_frame_box(exp_t a, exp_t b, monomial p) {
    return p.x < a && p.y < b && on_or_above_line(a, b, p);
}

}  // namespace detail

// Reduction number of (x^a, y^b, x^p.x * y^p.y) without forming any ideal
// power: the least k with floor(k*c/a) + floor(k*d/b) >= k, minus one. The
// quotients are maintained incrementally (p sits inside the frame box, so
// each remainder grows by less than one modulus per step).
inline exp_t three_gen_reduction_number(exp_t a, exp_t b, monomial p) {
    if (a == 0 || b == 0 || !detail::in_frame_box(a, b, p))
        throw domain_error(
            "the third generator must sit strictly inside the frame box, on "
            "or above the frame line");
    if (a > (~exp_t(0) >> 1) || b > (~exp_t(0) >> 1))
        throw overflow_error("frame too large for the quotient recurrence");
    exp_t qx = 0, rx = 0;  // floor(k*c/a) and k*c mod a
    exp_t qy = 0, ry = 0;  // floor(k*d/b) and k*d mod b
    for (exp_t k = 1; k <= std::min(a, b); ++k) {
        rx += p.x;
        if (rx >= a) {
            ++qx;
            rx -= a;
        }
        ry += p.y;
        if (ry >= b) {
            ++qy;
            ry -= b;
        }
        if (qx + qy >= k) return k - 1;
    }
    throw domain_error("unreachable: the search is bounded by min(a, b)");
}

// Sub-ideal on the generators lying exactly on the frame line. Always
// contains both pure powers.
inline monomial_ideal equigenerated_part(const framed_ideal& F) {
    std::vector<monomial> ms;
    for (monomial m : F.ideal().generators())
        if (detail::on_line(F.a(), F.b(), m)) ms.push_back(m);
    return monomial_ideal(std::move(ms));
}

// Minimal generators of the ideal of all monomials with nu > r: per x-degree
// the least y clearing the threshold, swept until the threshold reaches zero,
// then minimalized.
inline monomial_ideal strict_part(exp_t a, exp_t b, rational r) {
    if (a == 0 || b == 0) throw domain_error("strict_part wants a, b >= 1");
    if (r.den == 0 || r.num < r.den) throw domain_error("strict_part wants r >= 1");
    const exp_t nab = checked_mul(r.num, checked_mul(a, b));
    const exp_t da = checked_mul(r.den, a);
    std::vector<monomial> ms;
    for (exp_t c = 0;; ++c) {
        const exp_t dbc = checked_mul(r.den, checked_mul(b, c));
        if (dbc > nab) {
            ms.push_back({c, 0});
            break;
        }
        ms.push_back({c, (nab - dbc) / da + 1});
    }
    return monomial_ideal(std::move(ms));
}

}  // namespace staircase
