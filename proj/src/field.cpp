#include "talbot/field.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace talbot {

using nt::Int;

namespace {

constexpr double pi = std::numbers::pi;

// table[u] = exp(2*pi*j*u/n) for u in [0, n)
std::vector<Complex> twiddle_table(std::size_t n) {
    std::vector<Complex> table(n);
    for (std::size_t u = 0; u < n; ++u)
        table[u] =
            std::polar(1.0, 2.0 * pi * static_cast<double>(u) / static_cast<double>(n));
    return table;
}

long long balanced_index(std::size_t k, std::size_t n) {
    const long long kk = static_cast<long long>(k);
    const long long nn = static_cast<long long>(n);
    return 2 * kk <= nn ? kk : kk - nn;
}

} // namespace

PeriodicEnvelope::PeriodicEnvelope(double T, std::vector<Complex> s)
    : period(T), samples(std::move(s)) {
    if (!(period > 0.0)) throw std::domain_error("PeriodicEnvelope: period must be positive");
    if (samples.empty()) throw std::domain_error("PeriodicEnvelope: needs at least one sample");
}

Complex PeriodicEnvelope::at(long long k) const {
    const long long n = static_cast<long long>(samples.size());
    return samples[static_cast<std::size_t>(((k % n) + n) % n)];
}

double PeriodicEnvelope::mean_power() const {
    double acc = 0.0;
    for (const Complex& z : samples) acc += std::norm(z);
    return acc / static_cast<double>(samples.size());
}

LineSpectrum analyze(const PeriodicEnvelope& env) {
    const std::size_t n = env.size();
    LineSpectrum spec;
    spec.period = env.period;
    spec.sample_count = n;
    const long long nn = static_cast<long long>(n);
    const std::vector<Complex> table = twiddle_table(n);
    for (std::size_t i = 0; i < n; ++i) {
        const long long h = balanced_index(i, n);
        Complex acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const long long units = ((-h * static_cast<long long>(k)) % nn + nn) % nn;
            acc += env.samples[k] * table[static_cast<std::size_t>(units)];
        }
        spec.coefficients[h] = acc / static_cast<double>(n);
    }
    return spec;
}

PeriodicEnvelope synthesize(const LineSpectrum& spec, std::size_t n_samples) {
    if (n_samples == 0) throw std::domain_error("synthesize: need at least one sample");
    const long long nn = static_cast<long long>(n_samples);
    const std::vector<Complex> table = twiddle_table(n_samples);
    std::vector<Complex> samples(n_samples, Complex(0.0, 0.0));
    for (const auto& [h, c] : spec.coefficients) {
        for (std::size_t k = 0; k < n_samples; ++k) {
            const long long units = ((h * static_cast<long long>(k)) % nn + nn) % nn;
            samples[k] += c * table[static_cast<std::size_t>(units)];
        }
    }
    return PeriodicEnvelope(spec.period, std::move(samples));
}

PeriodicEnvelope synthesize(const LineSpectrum& spec) {
    if (spec.sample_count == 0)
        throw std::domain_error("synthesize: spectrum has no grid attached; pass a sample count");
    return synthesize(spec, spec.sample_count);
}

PeriodicEnvelope propagate(const PeriodicEnvelope& env, const TalbotOrder& order) {
    const Int q = order.q;
    const Int two_q = nt::checked_mul(2, q);
    LineSpectrum spec = analyze(env);
    for (auto& [h, c] : spec.coefficients) {
        const Int quad = nt::mul_mod(order.p, nt::mul_mod(h, h, two_q), two_q);
        const Int units = nt::mod_floor(-order.sigma * quad, two_q);
        c *= std::polar(1.0, pi * static_cast<double>(units) / static_cast<double>(q));
    }
    return synthesize(spec, env.size());
}

PeriodicEnvelope reconstruct_fractional(const PeriodicEnvelope& cell, const TalbotOrder& order) {
    const std::size_t n = cell.size();
    const Int q = order.q;
    if (n % static_cast<std::size_t>(q) != 0)
        throw grid_error("reconstruct_fractional: sample count not divisible by q");
    const int half_shift = nt::parity(order.p) & nt::parity(order.q);
    if (half_shift && n % 2 != 0)
        throw grid_error("reconstruct_fractional: half-period shift needs an even sample count");

    const PhaseSequence weights = talbot_phases(order);
    const long long cell_step = static_cast<long long>(n) / q;
    const long long offset = half_shift ? static_cast<long long>(n) / 2 : 0;
    const double scale = 1.0 / std::sqrt(static_cast<double>(q));

    std::vector<Complex> out(n, Complex(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
        Complex acc = 0.0;
        for (Int m = 0; m < q; ++m)
            acc += weights.entries[static_cast<std::size_t>(m)] *
                   cell.at(static_cast<long long>(k) - m * cell_step - offset);
        out[k] = acc * scale;
    }
    return PeriodicEnvelope(cell.period, std::move(out));
}

CompareMetrics compare(const PeriodicEnvelope& a, const PeriodicEnvelope& b) {
    if (a.size() != b.size())
        throw std::domain_error("compare: sample counts differ");
    const double t_scale = std::max(a.period, b.period);
    if (std::abs(a.period - b.period) > 1e-9 * t_scale)
        throw std::domain_error("compare: periods differ");

    CompareMetrics m;
    double sum_sq = 0.0, peak_a = 0.0, peak_b = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = std::abs(a.samples[k] - b.samples[k]);
        m.l_inf = std::max(m.l_inf, d);
        sum_sq += d * d;
        peak_a = std::max(peak_a, std::abs(a.samples[k]));
        peak_b = std::max(peak_b, std::abs(b.samples[k]));
    }
    m.l2 = std::sqrt(sum_sq / static_cast<double>(a.size()));
    if (peak_b == 0.0)
        m.peak_ratio = peak_a == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    else
        m.peak_ratio = peak_a / peak_b;
    return m;
}

} // namespace talbot
