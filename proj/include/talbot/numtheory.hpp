// numtheory.hpp - exact integer primitives: gcd, Bezout coefficients,
// modular inverses, Jacobi symbols, parity.
//
// All routines are pure functions on 64-bit signed integers. Products and
// sums run through 128-bit intermediates; anything that would not fit back
// into 64 bits throws std::overflow_error instead of wrapping.

#pragma once

#include <cstdint>
#include <stdexcept>

namespace talbot::nt {

using Int = std::int64_t;

struct BezoutTriple {
    Int d;  // gcd(a, b), non-negative
    Int x;
    Int y;  // a*x + b*y == d
};

// Non-negative gcd. gcd(0, 0) is a domain error.
Int gcd(Int a, Int b);

// Extended Euclid: a*x + b*y = d = gcd(a, b).
BezoutTriple bezout(Int a, Int b);

// The unique x in [1, b-1] with a*x = 1 (mod b).
// Requires b >= 2 and gcd(a, b) = 1; a may be negative or >= b.
Int mod_inverse(Int a, Int b);

// Jacobi symbol (a/b) in {-1, 0, +1} for odd positive b; (a/1) = +1.
// Returns 0 when gcd(a, b) != 1. Even or non-positive b is a domain error.
// Computed by iterated quadratic reciprocity, no factorization.
int jacobi(Int a, Int b);

// 0 for even x, 1 for odd x (well-defined for negative x).
int parity(Int x);

// Checked arithmetic helpers.
Int checked_mul(Int a, Int b);
Int checked_add(Int a, Int b);

// Least non-negative residue of a mod m, m >= 1.
Int mod_floor(Int a, Int m);

// (a*b) mod m through a 128-bit intermediate, result in [0, m).
Int mul_mod(Int a, Int b, Int m);

} // namespace talbot::nt
