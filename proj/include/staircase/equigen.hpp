#pragma once

#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "staircase/reduction.hpp"

namespace staircase {

// A finite subset of the nonnegative integers with bitset semantics.
// Sumsets are shift-or convolutions, which is what keeps the k-fold
// fixpoint tests and the enumeration surveys cheap.
class index_set {
 public:
    index_set() = default;

    static index_set single(exp_t i) {
        index_set s;
        s.insert(i);
        return s;
    }

    void insert(exp_t i) {
        const std::size_t w = i / 64;
        if (w >= words_.size()) words_.resize(w + 1, 0);
        words_[w] |= std::uint64_t(1) << (i % 64);
    }

    bool contains(exp_t i) const {
        const std::size_t w = i / 64;
        return w < words_.size() && (words_[w] >> (i % 64)) & 1;
    }

    bool empty() const { return words_.empty(); }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_) n += std::popcount(w);
        return n;
    }

    exp_t max_element() const {
        if (words_.empty()) throw domain_error("max_element of an empty set");
        const std::uint64_t top = words_.back();
        return 64 * (words_.size() - 1) + (63 - std::countl_zero(top));
    }

    std::vector<exp_t> elements() const {
        std::vector<exp_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w)
            for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1)
                out.push_back(64 * w + std::countr_zero(bits));
        return out;
    }

    friend bool operator==(const index_set&, const index_set&) = default;

    friend index_set sumset(const index_set& A, const index_set& B) {
        if (A.empty() || B.empty()) return {};
        index_set out;
        out.words_.assign((A.max_element() + B.max_element()) / 64 + 1, 0);
        for (std::size_t w = 0; w < A.words_.size(); ++w)
            for (std::uint64_t bits = A.words_[w]; bits; bits &= bits - 1)
                out.or_shifted(B, 64 * w + std::countr_zero(bits));
        return out;
    }

 private:
    // Sets are built by insert() or sized exactly by sumset(), so the word
    // vector never carries trailing zeros and default equality is set
    // equality.
    void or_shifted(const index_set& B, exp_t shift) {
        const std::size_t word = shift / 64;
        const unsigned bit = shift % 64;
        for (std::size_t w = 0; w < B.words_.size(); ++w) {
            words_[w + word] |= B.words_[w] << bit;
            if (bit != 0) {
                const std::uint64_t hi = B.words_[w] >> (64 - bit);
                if (hi != 0) words_[w + word + 1] |= hi;
            }
        }
    }

    std::vector<std::uint64_t> words_;
};

// k-fold sumset; the empty sum is {0}.
inline index_set k_fold(const index_set& A, exp_t k) {
    index_set out = index_set::single(0);
    index_set base = A;
    while (k > 0) {
        if (k & 1) out = sumset(out, base);
        k >>= 1;
        if (k > 0) base = sumset(base, base);
    }
    return out;
}

inline exp_t gcd_of(const index_set& A) {
    exp_t g = 0;
    for (exp_t i : A.elements()) g = std::gcd(g, i);
    return g;
}

// The exponent-index encoding of a quasi-equigenerated ideal: a subset of
// [0, g] containing both endpoints, g = gcd of the frame.
struct exponent_set {
    exp_t g;
    index_set members;

    exponent_set(exp_t g, index_set members) : g(g), members(std::move(members)) {
        if (g == 0) throw domain_error("exponent set wants g >= 1");
        if (!this->members.contains(0) || !this->members.contains(g) ||
            this->members.max_element() > g)
            throw domain_error(
                "exponent set members must lie in [0, g] and include 0 and g");
    }

    static exponent_set of(exp_t g, std::span<const exp_t> elems) {
        index_set s;
        for (exp_t e : elems) s.insert(e);
        return exponent_set(g, std::move(s));
    }

    static exponent_set of(exp_t g, std::initializer_list<exp_t> elems) {
        return of(g, std::span<const exp_t>(elems.begin(), elems.end()));
    }

    friend bool operator==(const exponent_set&, const exponent_set&) = default;
};

// The least k >= 0 with (k+1)A = {0,g} + kA. The internal cap g^2 sits far
// above the proven bound; reaching it means the theory and the code
// disagree, which must be loud.
inline exp_t r_equigen(const exponent_set& A) {
    index_set frame;
    frame.insert(0);
    frame.insert(A.g);
    index_set pk = index_set::single(0);  // kA
    const exp_t cap = A.g * A.g + 1;
    for (exp_t k = 0; k <= cap; ++k) {
        index_set next = sumset(pk, A.members);
        if (next == sumset(frame, pk)) return k;
        pk = std::move(next);
    }
    throw domain_error("sumset fixpoint exceeded the g^2 safety cap");
}

// Whether A is the full arithmetic progression of its own gcd d, with
// d != g. Exactly the sets with r_equigen == 1.
inline bool redone_characterize(const exponent_set& A) {
    const exp_t d = gcd_of(A.members);
    return d != A.g && A.members.count() == A.g / d + 1;
}

// g / gcd(e, g) - 1, the reduction number of the 3-generated set {0, e, g}.
inline exp_t masiproves_formula(exp_t g, exp_t e) {
    if (e == 0 || e >= g) throw domain_error("masiproves_formula wants 1 <= e <= g-1");
    return g / std::gcd(e, g) - 1;
}

// The family [0,1] u [j+1,g], whose reduction number is exactly j.
inline exponent_set somayeh_family(exp_t g, exp_t j) {
    if (j == 0 || j >= g) throw domain_error("somayeh_family wants 1 <= j <= g-1");
    index_set s;
    s.insert(0);
    s.insert(1);
    for (exp_t i = j + 1; i <= g; ++i) s.insert(i);
    return exponent_set(g, std::move(s));
}

// The sets attaining the maximal reduction number g-1: the bare frame when
// g = 1, or {0, e, g} with e coprime to g.
inline bool sunshine_classify(const exponent_set& A) {
    const std::size_t n = A.members.count();
    if (n == 2) return A.g == 1;
    if (n != 3) return false;
    return std::gcd(A.members.elements()[1], A.g) == 1;
}

inline exp_t multiplicity(const exponent_set& A) { return A.g / gcd_of(A.members); }

inline reduction_bounds upper_bounds(const exponent_set& A) {
    const exp_t cold = multiplicity(A);
    return {cold, cold + 2 - static_cast<exp_t>(A.members.count())};
}

// I_A on the frame (a, b): generators (i*a/g, b - i*b/g) for i in A.
inline framed_ideal to_ideal(const exponent_set& A, exp_t a, exp_t b) {
    if (std::gcd(a, b) != A.g)
        throw domain_error("frame mismatch: gcd(a, b) must equal the set's g");
    const exp_t sx = a / A.g, sy = b / A.g;
    std::vector<monomial> ms;
    for (exp_t i : A.members.elements())
        ms.push_back({checked_mul(i, sx), checked_mul(A.g - i, sy)});
    return framed_ideal(monomial_ideal(std::move(ms)));
}

// Inverse of to_ideal on quasi-equigenerated input. Generators are required
// to be exactly the lattice points of the frame segment; near misses are
// rejected rather than snapped.
inline exponent_set from_ideal(const framed_ideal& F) {
    if (!F.quasi_equigenerated())
        throw domain_error(
            "from_ideal wants a quasi-equigenerated ideal: every generator on "
            "the frame line");
    const exp_t g = std::gcd(F.a(), F.b());
    const exp_t sx = F.a() / g, sy = F.b() / g;
    index_set s;
    for (monomial m : F.ideal().generators()) {
        if (m.x % sx != 0) throw domain_error("generator off the lattice of the frame segment");
        const exp_t i = m.x / sx;
        if (i > g || m.y != (g - i) * sy)
            throw domain_error("generator off the lattice of the frame segment");
        s.insert(i);
    }
    return exponent_set(g, std::move(s));
}

// I_A plus everything strictly above the nu = r line. Its reduction number
// is r(I_A) when that is positive, and 1 otherwise (except in the
// degenerate frames where the strict region adds nothing and the result is
// the frame itself).
inline framed_ideal onion_ideal(exp_t a, exp_t b, const exponent_set& A, rational r) {
    const monomial_ideal base = to_ideal(A, a, b).ideal();
    return framed_ideal(sum(base, strict_part(a, b, r)));
}

}  // namespace staircase
