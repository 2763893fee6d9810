// talbot_s.hpp - the parity-dependent modular inverse s attached to a
// fractional Talbot order p/q.
//
// For coprime positive p, q there is exactly one integer s with
//   1 <= s <= 2q-1,   s*p = 1 + q*e_q (mod 2q),   parity(s) = 1 - parity(q),
// and that s is coprime with q. It is
//   s = [1/p]_{2q}        (q even)
//   s = 2*[1/(2p)]_q      (q odd).
// This header also provides the alternative squared-inverse construction,
// the closed-form series, the complementary-order sum rule and the (p, q)
// table builder.

#pragma once

#include <optional>
#include <vector>

#include "talbot/numtheory.hpp"

namespace talbot {

struct TalbotOrder {
    nt::Int p;
    nt::Int q;
    int sigma;  // dispersion sign, +1 or -1

    // Validates p, q >= 1, gcd(p, q) = 1, sigma in {+1, -1}.
    TalbotOrder(nt::Int p, nt::Int q, int sigma = +1);
};

struct TalbotS {
    nt::Int s;
    TalbotOrder order;
};

// The unique s of the modular construction. p is accepted unreduced.
// For q = 1 the range clause is vacuous and the even representative
// s = 2 (= 1 + q*e_q) is returned.
TalbotS compute_s(const TalbotOrder& order);

// Independent checker: range, modular equation, parity opposition and
// coprimality with q. Used for exhaustive uniqueness scans.
bool verify_s(const TalbotOrder& order, nt::Int s);

// Squared-inverse construction, reduced to [0, 2q-1]:
//   p, q odd:        4*p*[1/(2p)]_q^2 (mod 2q)
//   otherwise:       p*[1/p]_q^2      (mod 2q)
// Equals compute_s(order).s for every coprime pair. Requires q >= 2.
nt::Int compute_s_alt(const TalbotOrder& order);

// Closed-form series, when one applies (p reduced mod 2q):
//   p = 1   (mod 2q)            -> s = 1 + q*e_q
//   p = q+-1 (mod 2q)           -> s = q+-1
//   q = 1 + 2np  (n >= 1)       -> s = -2n (mod 2q)
//   q = -1 + 2np (n >= 1)       -> s = +2n (mod 2q)
std::optional<nt::Int> closed_form_s(const TalbotOrder& order);

// s' for the complementary order (q-p)/q. Requires p < q:
//   q odd               -> 2q - s
//   q even, s <= q-1    -> q - s
//   q even, s >= q+1    -> 3q - s
nt::Int complement_s(const TalbotOrder& order);

struct STable {
    nt::Int q_max = 0;
    nt::Int p_max = 0;
    // cells[q-2][p-1]; empty optional where gcd(p, q) != 1
    std::vector<std::vector<std::optional<nt::Int>>> cells;

    const std::optional<nt::Int>& at(nt::Int q, nt::Int p) const;
};

// Values of s for q in [2, q_max], p in [1, p_max].
STable s_table(nt::Int q_max, nt::Int p_max);

} // namespace talbot
