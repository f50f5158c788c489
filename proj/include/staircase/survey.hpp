#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "staircase/equigen.hpp"

namespace staircase {

struct survey_row {
    exp_t j;               // reduction number bucket
    std::uint64_t count;
};

// Bucketed enumeration result. Ratios are exact by construction:
// count / total, never floated.
struct survey_table {
    std::string parameter;
    std::vector<survey_row> rows;  // j ascending, nonzero counts only
    std::uint64_t total = 0;
};

inline std::uint64_t count_for(const survey_table& t, exp_t j) {
    for (const survey_row& row : t.rows)
        if (row.j == j) return row.count;
    return 0;
}

namespace detail {

inline survey_table bucketize(std::string parameter,
                              const std::map<exp_t, std::uint64_t>& buckets) {
    survey_table t;
    t.parameter = std::move(parameter);
    for (auto [j, count] : buckets) {
        t.rows.push_back({j, count});
        t.total += count;
    }
    return t;
}

}  // namespace detail

// All 2^(a-1) exponent sets on the square frame of side a, bucketed by
// reduction number. Exhaustive, hence the guard.
inline survey_table m_table(exp_t a) {
    if (a < 2) throw domain_error("m_table wants a >= 2");
    if (a > 22) throw domain_error("m_table beyond a = 22 is not tractable");
    std::map<exp_t, std::uint64_t> buckets;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (a - 1)); ++mask) {
        index_set s;
        s.insert(0);
        s.insert(a);
        for (exp_t i = 1; i < a; ++i)
            if ((mask >> (i - 1)) & 1) s.insert(i);
        ++buckets[r_equigen(exponent_set(a, std::move(s)))];
    }
    return detail::bucketize(std::to_string(a), buckets);
}

// The a-1 three-generated sets {0, e, a}, bucketed by the closed-form
// reduction number.
inline survey_table n_table(exp_t a) {
    if (a < 2) throw domain_error("n_table wants a >= 2");
    std::map<exp_t, std::uint64_t> buckets;
    for (exp_t e = 1; e < a; ++e) ++buckets[masiproves_formula(a, e)];
    return detail::bucketize(std::to_string(a), buckets);
}

inline exp_t totient(exp_t a) {
    if (a == 0) throw domain_error("totient wants a >= 1");
    exp_t result = a, n = a;
    for (exp_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

inline bool is_prime(exp_t p) {
    if (p < 2) return false;
    for (exp_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Reduction numbers realized by third generators strictly inside the frame
// box (points beyond it make the third generator redundant).
inline std::set<exp_t> r_set(exp_t a, exp_t b) {
    if (a < 2 || b < a) throw domain_error("r_set wants 2 <= a <= b");
    std::set<exp_t> out;
    for (exp_t c = 1; c < a; ++c) {
        // least d with b*c + a*d >= a*b
        const exp_t d0 = (a * b - b * c + a - 1) / a;
        for (exp_t d = d0; d < b; ++d)
            out.insert(three_gen_reduction_number(a, b, {c, d}));
    }
    return out;
}

struct ourlimits_report {
    exp_t gap;   // (p-1) - |r_set(p, p)|
    bool holds;  // gap >= (p-1)/2 - 1
};

inline ourlimits_report ourlimits_check(exp_t p) {
    if (!is_prime(p) || p == 2) throw domain_error("ourlimits_check wants an odd prime");
    const exp_t gap = (p - 1) - r_set(p, p).size();
    return {gap, 2 * gap + 2 >= p - 1};
}

struct coverage_report {
    std::set<exp_t> covered;
    bool complete;  // covered == [1, a-1]
};

// Union of r_set(a, b) over a <= b <= bmax. The default bmax = 2a is
// already enough to cover all of [1, a-1].
inline coverage_report specialnight_check(exp_t a, exp_t bmax = 0) {
    if (a < 2) throw domain_error("specialnight_check wants a >= 2");
    if (bmax == 0) bmax = 2 * a;
    if (bmax < a) throw domain_error("specialnight_check wants bmax >= a");
    coverage_report out;
    for (exp_t b = a; b <= bmax; ++b) {
        std::set<exp_t> rb = r_set(a, b);
        out.covered.insert(rb.begin(), rb.end());
    }
    out.complete = true;
    for (exp_t j = 1; j < a; ++j)
        if (!out.covered.contains(j)) out.complete = false;
    out.complete = out.complete && out.covered.size() == a - 1;
    return out;
}

}  // namespace staircase
