// gauss_phase.hpp - closed-form Gauss-sum phase sequences of the
// fractional Talbot effect.
//
// For a Talbot order p/q with integer s (talbot_s.hpp) the length-q DFT
// pair is
//   x_n = exp(j*sigma*xi0) * exp(+j*pi*sigma*(s/q)*n^2)
//   X_m = sqrt(q) * exp(-j*pi*sigma*(p/q)*(1+q*e_q)*m^2)
// with the global phase
//   exp(j*xi0) = (s/q) * exp(+j*pi*(q-1)/4)   (q odd)
//   exp(j*xi0) = (q/s) * exp(-j*pi*s/4)       (q even)
// where (a/b) is a Jacobi symbol; a symbol value of -1 is absorbed as an
// added pi. Both sequences have perfect periodic autocorrelation and are
// instances of Chu's polyphase construction.
//
// All closed-form phases are built as ExactPhase (denominators divide 4q);
// floats appear only in the direct-sum oracles and the DFT helpers.

#pragma once

#include <optional>
#include <vector>

#include "talbot/exact_phase.hpp"
#include "talbot/talbot_s.hpp"

namespace talbot {

// Length-q list of unit-magnitude values, optionally backed by exact
// phases. `gain` is a real scalar carried next to the unit entries (the
// spectral sequence stores sqrt(q) there). Indexing is periodic.
struct PhaseSequence {
    std::vector<Complex> entries;                    // unit magnitude
    std::optional<std::vector<ExactPhase>> exact;    // backing, when closed-form
    double gain = 1.0;

    // provenance
    std::optional<TalbotOrder> order;
    std::optional<nt::Int> s;
    std::optional<ExactPhase> xi0;

    std::size_t size() const { return entries.size(); }

    // Cyclic index extension, valid for any integer n.
    Complex at(long long n) const;

    static PhaseSequence from_exact(std::vector<ExactPhase> phases, double gain = 1.0);
};

// Global phase of the sequence for sigma = +1 (conjugate for sigma = -1),
// via the s-form of the closed expression.
ExactPhase xi0(const TalbotOrder& order);

// Same phase via the p-form; an independent route kept for cross-checks.
ExactPhase xi0_p_form(const TalbotOrder& order);

// Direct q-term sum (1/sqrt(q)) sum_m exp(-j*pi*(s/q)*m^2); numeric
// oracle for xi0. Requires gcd(s, q) = 1, q >= 1.
Complex xi0_bruteforce(nt::Int s, nt::Int q);

// The x_n sequence (exact backing, gain 1).
PhaseSequence talbot_phases(const TalbotOrder& order);

// The X_m sequence: unit phases plus gain sqrt(q).
PhaseSequence spectral_weights(const TalbotOrder& order);

// Direct evaluation of the defining q-term Gauss sum for entry n;
// numeric oracle for talbot_phases.
Complex gauss_sum_direct(const TalbotOrder& order, nt::Int n);

// Plain O(q^2) transforms; exactness of the test semantics beats speed
// at the q used here. idft(dft(x)) = x to rounding.
std::vector<Complex> dft(const std::vector<Complex>& x);
std::vector<Complex> idft(const std::vector<Complex>& x);
std::vector<Complex> dft(const PhaseSequence& seq);   // gain applied
std::vector<Complex> idft(const PhaseSequence& seq);  // gain applied

// R(n) = sum_k conj(x_k) x_{k+n mod q}, length q.
std::vector<Complex> periodic_autocorrelation(const std::vector<Complex>& x);

// Chu sequence of length M, gcd(N, M) = 1:
//   exp(sign*j*pi*N*m^2/M)     (M even)
//   exp(sign*j*pi*N*m(m+1)/M)  (M odd)
std::vector<Complex> chu_sequence(nt::Int N, nt::Int M, int sign);

// True when some (N, sign, cyclic shift, global phase) makes seq match a
// Chu sequence of its own length; exhaustive over N in [1, 2q], shifts.
bool is_chu_equivalent(const std::vector<Complex>& seq, double tol = 1e-9);

} // namespace talbot
