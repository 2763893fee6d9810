// verify.hpp - exhaustive property sweeps over the coprime (p, q) plane.
//
// Each function checks one property of the construction across every
// coprime pair up to the given bound and returns a compact report. Exact
// integer and exact-phase properties use tolerance 0; numeric properties
// take an explicit tolerance. The CLI `verify` suites and the acceptance
// runner are both built from these.

#pragma once

#include <string>
#include <vector>

#include "talbot/numtheory.hpp"

namespace talbot::verify {

struct Report {
    std::string name;
    bool pass = false;
    long long cases = 0;    // work items checked
    double worst = 0.0;     // worst numeric deviation seen (0 for exact checks)
    std::string detail;     // first failure, or coverage notes
};

// --- integer s ---------------------------------------------------------
Report uniqueness_of_s(nt::Int q_max);                      // one solution per pair
Report s_periodicity(nt::Int q_max);                        // p -> p+2q (and +q for odd q)
Report s_self_duality(nt::Int q_max);                       // p = q+-1 => s = p
Report alt_s_equivalence(nt::Int q_max, nt::Int p_max);     // squared-inverse forms
Report closed_form_series(nt::Int q_max);                   // series values match
Report complementary_orders(nt::Int q_max);                 // (q-p)/q sum rule

// --- Gauss-sum sequences ------------------------------------------------
Report dft_pair(nt::Int q_max, double tol);                 // dft(x) = X, x = direct sum
Report global_phase_forms(nt::Int q_max, double tol);       // s-form = p-form = brute force
Report autocorrelation_delta(nt::Int q_max, double tol);    // R = q*delta, both sequences
Report flat_spectrum(nt::Int q_max, double tol);            // |dft(x)| = sqrt(q)
Report chu_membership(nt::Int q_max, double tol);           // both sequences are Chu

// --- phase families -----------------------------------------------------
Report r_family_equivalence(nt::Int q_max, double tol);     // shift+phase equivalence
Report r_s_relation(nt::Int q_max);                         // s vs r = [1/p]_q
Report leger_family(nt::Int q_max, double tol);             // p = 1 family, zero shift
Report spectral_family_periods(nt::Int q_max);              // period rule + self-dual

// --- TAI ---------------------------------------------------------------
Report bin_interference(nt::Int q_max, double tol);         // convolution sum = q*delta
Report tai_concentration(nt::Int q_max, std::size_t samples_per_bin, double tol);
Report tai_spectral_check(nt::Int q_max, double tol);       // dispersed lines = rect train

// --- propagation engine -------------------------------------------------
Report propagation_equivalence(nt::Int q_max, double tol, unsigned seed = 20161129);
Report propagation_unitarity(nt::Int q_max, double tol, unsigned seed = 20161129);
Report propagation_composition(nt::Int q_max, double tol, unsigned seed = 20161129);

std::string format(const Report& report);

} // namespace talbot::verify
