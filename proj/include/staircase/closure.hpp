#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "staircase/reduction.hpp"

namespace staircase {

// One step of the 3-generator recurrence: i*c = r*a + x, i*d = s*b + y
// with 0 <= x < a, 0 <= y < b.
struct closure_step {
    exp_t i, r, s, x, y;
};

struct closure_trace {
    std::vector<monomial> added;       // generators adjoined, in adjunction order
    std::optional<exp_t> k;            // stopping index of the 3-generator recurrence
    std::vector<closure_step> steps;   // populated by the 3-generator route
};

struct violation {
    monomial p, q;     // the offending generator pair (p <= q canonically)
    monomial witness;  // the missing divisor its product demands
};

// All non-frame generator pairs whose product drops below the doubled frame
// and whose required witness monomial is absent. Empty exactly when the
// reduction number is 1. The ideal must differ from its frame.
inline std::vector<violation> violations(const framed_ideal& F) {
    const exp_t a = F.a(), b = F.b();
    const auto gens = F.ideal().generators();
    if (gens.size() <= 2)
        throw domain_error("the frame itself has reduction number 0, not 1");
    std::vector<violation> out;
    for (std::size_t i = 1; i + 1 < gens.size(); ++i) {
        for (std::size_t j = i; j + 1 < gens.size(); ++j) {
            const monomial m = gens[i] * gens[j];
            const bool over_x = m.x >= a, over_y = m.y >= b;
            if (over_x && over_y) continue;  // lands in the frame square
            // nu(m) >= 2 forces the product past one frame power
            if (over_x == over_y)
                throw domain_error("generator pair below the doubled frame line");
            const monomial w =
                over_x ? monomial{m.x - a, m.y} : monomial{m.x, m.y - b};
            if (!F.ideal().contains(w)) out.push_back({gens[i], gens[j], w});
        }
    }
    return out;
}

inline bool has_reduction_number_one(const framed_ideal& F) {
    if (F.ideal().size() <= 2) return false;  // the frame: reduction number 0
    return violations(F).empty();
}

// Smallest ideal containing I with reduction number 1 (the frame itself when
// I is the frame), by adjoining every missing witness per round until no
// violation remains. All witnesses land strictly inside the frame box, so
// the rounds exhaust a finite grid.
inline std::pair<framed_ideal, closure_trace> closure(const framed_ideal& F) {
    closure_trace trace;
    if (F.ideal().size() <= 2) return {F, std::move(trace)};
    framed_ideal cur = F;
    const exp_t round_guard = checked_mul(F.a(), F.b()) + 2;
    for (exp_t round = 0;; ++round) {
        if (round > round_guard)
            throw domain_error("closure failed to reach its fixpoint");
        std::vector<violation> v = violations(cur);
        if (v.empty()) break;
        std::vector<monomial> adjoined;
        for (const violation& viol : v) adjoined.push_back(viol.witness);
        std::sort(adjoined.begin(), adjoined.end());
        adjoined.erase(std::unique(adjoined.begin(), adjoined.end()),
                       adjoined.end());
        trace.added.insert(trace.added.end(), adjoined.begin(), adjoined.end());
        std::vector<monomial> gens(cur.ideal().generators().begin(),
                                   cur.ideal().generators().end());
        gens.insert(gens.end(), adjoined.begin(), adjoined.end());
        cur = framed_ideal(monomial_ideal(std::move(gens)));
    }
    return {std::move(cur), std::move(trace)};
}

// Closure of (x^a, y^b, u_p) by the explicit recurrence: the remainders p_i
// of i*p modulo the frame box, adjoined for i < k, where k is the first
// index with r_k + s_k >= k.
inline std::pair<framed_ideal, closure_trace> closure_3gen(exp_t a, exp_t b,
                                                           monomial p) {
    if (a == 0 || b == 0 || !detail::in_frame_box(a, b, p))
        throw domain_error(
            "the third generator must sit strictly inside the frame box, on "
            "or above the frame line");
    closure_trace trace;
    std::vector<monomial> gens{{a, 0}, {0, b}, p};
    for (exp_t i = 1;; ++i) {
        const exp_t ic = checked_mul(i, p.x), id = checked_mul(i, p.y);
        const closure_step st{i, ic / a, id / b, ic % a, id % b};
        trace.steps.push_back(st);
        if (st.r + st.s >= i) {
            trace.k = i;
            break;
        }
        if (i >= 2) {
            const monomial pi{st.x, st.y};
            if (std::find(gens.begin(), gens.end(), pi) == gens.end()) {
                gens.push_back(pi);
                trace.added.push_back(pi);
            }
        }
    }
    return {framed_ideal(monomial_ideal(std::move(gens))), std::move(trace)};
}

// Exhaustive certificate of minimality: intersects every reduction-number-1
// ideal containing I whose extra generators come from the lattice points
// strictly inside the frame box and on or above the frame line. Exponential
// in the grid size, hence the guard.
inline framed_ideal minimal_one_oracle(const framed_ideal& F,
                                       std::size_t max_grid = 30) {
    if (F.ideal().size() <= 2) return F;
    const exp_t a = F.a(), b = F.b();
    std::vector<monomial> grid;
    for (exp_t c = 1; c < a; ++c)
        for (exp_t d = 1; d < b; ++d) {
            const monomial m{c, d};
            if (detail::on_or_above_line(a, b, m) && !F.ideal().contains(m))
                grid.push_back(m);
        }
    if (grid.size() > max_grid)
        throw domain_error("oracle grid too large to enumerate");
    const auto base = F.ideal().generators();
    std::optional<monomial_ideal> acc;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << grid.size());
         ++mask) {
        std::vector<monomial> gens(base.begin(), base.end());
        for (std::size_t i = 0; i < grid.size(); ++i)
            if ((mask >> i) & 1) gens.push_back(grid[i]);
        framed_ideal L{monomial_ideal(std::move(gens))};
        if (!has_reduction_number_one(L)) continue;
        acc = acc ? intersection(*acc, L.ideal()) : L.ideal();
    }
    if (!acc)
        throw domain_error("no reduction-number-1 ideal found over the grid");
    return framed_ideal(std::move(*acc));
}

}  // namespace staircase
