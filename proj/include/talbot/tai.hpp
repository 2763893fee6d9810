// tai.hpp - Talbot array illuminator design and verification.
//
// A TAI imprints the conjugates of the Talbot propagation phases on q
// time bins of width T/q. After dispersive propagation at order p/q the
// bin-wise interference reduces to the perfect periodic autocorrelation
// of the Gauss-sum sequence, so the field concentrates into one bin per
// period with amplitude sqrt(q) (a peak power gain of q).
//
// The module also relates the design to the neighbouring phase families:
// the r-based family (r = [1/p]_q), the alternating p = 1 family, and
// the quadratic modulation family used for spectral self-imaging.

#pragma once

#include <cstddef>
#include <optional>

#include "talbot/field.hpp"
#include "talbot/gauss_phase.hpp"

namespace talbot {

struct TaiDesign {
    TalbotOrder order;
    nt::Int s;
    PhaseSequence levels;  // conj of talbot_phases(order), exact backing
};

// The q multilevel phases Phi_n = exp(-j*sigma*(xi0 + pi*(s/q)*n^2)).
TaiDesign tai_phases(const TalbotOrder& order);

// Unit cw carrier modulated by the design levels on bins of width T/q,
// samples_per_bin samples each.
PeriodicEnvelope tai_modulated(const TaiDesign& design, std::size_t samples_per_bin,
                               double period = 1.0);

// Modulate and propagate at the design order. samples_per_bin >= 2.
PeriodicEnvelope tai_forward(const TaiDesign& design, std::size_t samples_per_bin = 16);

struct TaiConcentration {
    std::size_t hot_bin = 0;
    double hot_amplitude = 0.0;      // |E| at the hot bin centre
    double max_off_amplitude = 0.0;  // largest |E| over the other bin centres
};

// Bin amplitudes measured at bin centres (sidesteps the rect edges).
TaiConcentration measure_concentration(const PeriodicEnvelope& env, nt::Int q);

// Line spectrum of the modulated (pre-dispersion) envelope, closed form:
//   c_m = (1/q) * sinc(m/q) * exp(-j*pi*m/q) * sum_n Phi_n exp(-2*pi*j*m*n/q)
// for lines |m| <= m_max (default 4q). Multiplying line m by
// exp(-j*pi*sigma*(p/q)*m^2) yields the chirp-free rect-train spectrum.
LineSpectrum tai_spectrum(const TaiDesign& design, long long m_max = 0);

// Alternative global-phase-free family, r = [1/p]_q:
//   exp(j*sigma*pi*(r/q)*m^2)      (q even)
//   exp(j*sigma*pi*(r/q)*m(m-1))   (q odd)
PhaseSequence r_based_phases(const TalbotOrder& order);

struct ShiftAndPhase {
    std::size_t shift = 0;
    Complex global_phase{1.0, 0.0};
};

// Finds (cyclic shift, unit global phase) with a[n] = g * b[n+shift] for
// all n, exhaustive over shifts, phase fixed from the first entry.
std::optional<ShiftAndPhase> equivalent_up_to_shift_and_phase(const PhaseSequence& a,
                                                              const PhaseSequence& b,
                                                              double tol = 1e-10);

// The p = 1 family (-1)^(n*e_q) * exp(j*sigma*pi*n^2/q).
PhaseSequence leger_phases(nt::Int q, int sigma);

struct SpectralTalbotFamily {
    PhaseSequence phases;
    nt::Int minimal_period = 0;  // q when p*q is even, else 2q
};

// Quadratic modulation family exp(sigma*j*pi*(p/q)*n^2) of the requested
// length; generally 2q-periodic since p/q may hold two odd integers.
SpectralTalbotFamily spectral_talbot_phases(const TalbotOrder& order, nt::Int length);

} // namespace talbot
