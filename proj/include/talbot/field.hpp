// field.hpp - sampled periodic envelopes and their dispersive propagation
// at fractional Talbot orders.
//
// propagate() works in the line spectrum: harmonic n picks up the all-pass
// factor exp(-j*pi*sigma*(p/q)*n^2). reconstruct_fractional() builds the
// same output directly in time as the weighted sum of q cyclically delayed
// copies of the input, shifted by half a period when p*q is odd. The two
// routes agree to rounding; compare() quantifies the difference.

#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "talbot/gauss_phase.hpp"

namespace talbot {

// Data/grid mismatch distinct from plain domain errors (exit code 3 in
// the CLI).
struct grid_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One period of a complex signal on the uniform grid t_k = k*T/N.
struct PeriodicEnvelope {
    double period = 1.0;
    std::vector<Complex> samples;

    PeriodicEnvelope() = default;
    PeriodicEnvelope(double T, std::vector<Complex> s);

    std::size_t size() const { return samples.size(); }
    Complex at(long long k) const;  // cyclic index
    double mean_power() const;
};

// Fourier-series lines c_n on the balanced harmonic set (-N/2, N/2].
struct LineSpectrum {
    double period = 1.0;
    std::size_t sample_count = 0;  // 0 when analytic (not grid-bound)
    std::map<long long, Complex> coefficients;
};

LineSpectrum analyze(const PeriodicEnvelope& env);
PeriodicEnvelope synthesize(const LineSpectrum& spec);                      // uses sample_count
PeriodicEnvelope synthesize(const LineSpectrum& spec, std::size_t n_samples);

// Multiply line n by exp(-j*pi*sigma*(p/q)*n^2) and resynthesize.
PeriodicEnvelope propagate(const PeriodicEnvelope& env, const TalbotOrder& order);

// Analytic route: (exp(j*sigma*xi0)/sqrt(q)) * sum_n exp(j*pi*sigma*(s/q)*n^2)
// times the cell delayed by n*T/q, plus the half-period shift when p*q is
// odd. Requires q | N; the half-period shift additionally requires N even.
PeriodicEnvelope reconstruct_fractional(const PeriodicEnvelope& cell, const TalbotOrder& order);

struct CompareMetrics {
    double l_inf = 0.0;
    double l2 = 0.0;        // rms of the pointwise difference
    double peak_ratio = 0.0;
};

// Deterministic difference metrics; both envelopes must share N and T.
CompareMetrics compare(const PeriodicEnvelope& a, const PeriodicEnvelope& b);

} // namespace talbot
