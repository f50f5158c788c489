#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace staircase {

// Exponents are 64-bit unsigned; every arithmetic step is overflow-checked
// and throws instead of wrapping.
using exp_t = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

struct overflow_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inputs outside an operation's domain (missing pure powers, frame
// mismatches, out-of-range parameters, ...).
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed ideal or set literals.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An iteration hit its configured cap before reaching its fixpoint.
struct cap_exceeded : domain_error {
    explicit cap_exceeded(exp_t cap)
        : domain_error("iteration cap " + std::to_string(cap) +
                       " exceeded before the power chain stabilized"),
          cap(cap) {}
    exp_t cap;
};

inline exp_t checked_add(exp_t a, exp_t b) {
    exp_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error("exponent addition overflows 64 bits");
    return r;
}

inline exp_t checked_mul(exp_t a, exp_t b) {
    exp_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw overflow_error("exponent multiplication overflows 64 bits");
    return r;
}

}  // namespace staircase
