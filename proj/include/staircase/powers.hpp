#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "staircase/equigen.hpp"

namespace staircase {

struct power_profile_t {
    std::vector<exp_t> rs;       // rs[k-1] = r(I^k) for k = 1..kmax
    std::optional<exp_t> c_index;  // least k with r(I^k) = 1, if found
};

// Upper bound ceil((r1 - 1) / k) + 1 on the reduction number of the k-th
// power, given r1 for the ideal itself.
inline exp_t hoa_bound(exp_t r1, exp_t k) {
    if (r1 == 0) return k == 1 ? 0 : 1;
    return (r1 - 1 + k - 1) / k + 1;
}

namespace detail {

inline exp_t r_of_fold(const exponent_set& A, exp_t k) {
    return r_equigen(exponent_set(k * A.g, k_fold(A.members, k)));
}

}  // namespace detail

// Profile of r(I^k) along the k-fold sumsets k*A. When no entry reaches 1
// within kmax and gcd(A) = 1, the search for the stabilization index
// continues to g - 2, past which the answer is settled either way.
inline power_profile_t power_profile(const exponent_set& A, exp_t kmax) {
    if (kmax == 0) throw domain_error("power profile wants kmax >= 1");
    power_profile_t out;
    for (exp_t k = 1; k <= kmax; ++k) {
        out.rs.push_back(detail::r_of_fold(A, k));
        if (!out.c_index && out.rs.back() == 1) out.c_index = k;
    }
    if (!out.c_index && gcd_of(A.members) == 1) {
        for (exp_t k = kmax + 1; A.g >= 2 && k <= A.g - 2; ++k) {
            if (detail::r_of_fold(A, k) == 1) {
                out.c_index = k;
                break;
            }
        }
    }
    return out;
}

// Same profile over ideal powers. Quasi-equigenerated input is routed
// through the sumset encoding; everything else multiplies ideals, framing
// I^k over (k*a, k*b).
inline power_profile_t power_profile(const framed_ideal& F, exp_t kmax,
                                     exp_t cap = 0) {
    if (F.quasi_equigenerated()) return power_profile(from_ideal(F), kmax);
    if (kmax == 0) throw domain_error("power profile wants kmax >= 1");
    power_profile_t out;
    monomial_ideal pk = F.ideal();
    for (exp_t k = 1; k <= kmax; ++k) {
        framed_ideal Fk{pk};
        out.rs.push_back(reduction_number(Fk, cap).r);
        if (!out.c_index && out.rs.back() == 1) out.c_index = k;
        if (k < kmax) pk = product(pk, F.ideal());
    }
    return out;
}

struct related_report {
    bool eventually_one;             // powers stabilize at reduction number 1
    std::optional<exp_t> c_index;    // first such power
};

// For gcd(A) = 1: the powers stabilize at reduction number 1 exactly when A
// contains 0, 1, g-1 and g, and then from power g-2 onward.
inline related_report related_check(const exponent_set& A) {
    if (gcd_of(A.members) != 1)
        throw domain_error("related_check wants gcd(A) = 1");
    const exp_t g = A.g;
    const bool border = A.members.contains(0) && A.members.contains(1) &&
                        A.members.contains(g - 1) && A.members.contains(g);
    related_report out{border, std::nullopt};
    if (border) {
        const exp_t cap = std::max<exp_t>(g >= 2 ? g - 2 : 0, 2);
        for (exp_t k = 1; k <= cap; ++k) {
            if (detail::r_of_fold(A, k) == 1) {
                out.c_index = k;
                break;
            }
        }
    }
    return out;
}

// The family [0, g-j-1] u [g-1, g], whose powers first reach reduction
// number 1 exactly at power j.
inline exponent_set masoomeh_family(exp_t g, exp_t j) {
    if (g < 3 || j == 0 || j > g - 2)
        throw domain_error("masoomeh_family wants g >= 3 and 1 <= j <= g-2");
    index_set s;
    for (exp_t i = 0; i <= g - j - 1; ++i) s.insert(i);
    s.insert(g - 1);
    s.insert(g);
    return exponent_set(g, std::move(s));
}

// Predicted stabilized value of r(I^k) for square frames: 1 when both
// border monomials x*y^(a-1) and x^(a-1)*y lie in I, else 2.
inline int limit_value(const framed_ideal& F) {
    if (F.a() != F.b()) throw domain_error("limit_value wants a square frame");
    const exp_t a = F.a();
    return F.ideal().contains({1, a - 1}) && F.ideal().contains({a - 1, 1})
               ? 1
               : 2;
}

// Every k < kmax where r(I^(k+1)) exceeds r(I^k). Reported, never asserted:
// the expectation is an empty list, but nothing rules a hit out.
inline std::vector<exp_t> monotonicity_probe(const power_profile_t& profile) {
    std::vector<exp_t> out;
    for (std::size_t k = 1; k < profile.rs.size(); ++k)
        if (profile.rs[k] > profile.rs[k - 1]) out.push_back(k);
    return out;
}

inline std::vector<exp_t> monotonicity_probe(const framed_ideal& F, exp_t kmax,
                                             exp_t cap = 0) {
    return monotonicity_probe(power_profile(F, kmax, cap));
}

}  // namespace staircase
