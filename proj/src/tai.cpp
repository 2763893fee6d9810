#include "talbot/tai.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace talbot {

using nt::Int;

namespace {

constexpr double pi = std::numbers::pi;

double sinc(double x) {
    if (x == 0.0) return 1.0;
    return std::sin(pi * x) / (pi * x);
}

} // namespace

TaiDesign tai_phases(const TalbotOrder& order) {
    PhaseSequence x = talbot_phases(order);
    std::vector<ExactPhase> conj;
    conj.reserve(x.size());
    for (const ExactPhase& ph : *x.exact) conj.push_back(-ph);
    PhaseSequence levels = PhaseSequence::from_exact(std::move(conj));
    levels.order = order;
    levels.s = x.s;
    levels.xi0 = -*x.xi0;
    return {order, *x.s, std::move(levels)};
}

PeriodicEnvelope tai_modulated(const TaiDesign& design, std::size_t samples_per_bin,
                               double period) {
    if (samples_per_bin < 1)
        throw std::domain_error("tai_modulated: need at least one sample per bin");
    const std::size_t q = design.levels.size();
    std::vector<Complex> samples(q * samples_per_bin);
    for (std::size_t n = 0; n < q; ++n)
        for (std::size_t j = 0; j < samples_per_bin; ++j)
            samples[n * samples_per_bin + j] = design.levels.entries[n];
    return PeriodicEnvelope(period, std::move(samples));
}

PeriodicEnvelope tai_forward(const TaiDesign& design, std::size_t samples_per_bin) {
    if (samples_per_bin < 2)
        throw std::domain_error("tai_forward: samples_per_bin must be >= 2");
    return propagate(tai_modulated(design, samples_per_bin), design.order);
}

TaiConcentration measure_concentration(const PeriodicEnvelope& env, Int q) {
    if (q < 1) throw std::domain_error("measure_concentration: q must be positive");
    const std::size_t n = env.size();
    const std::size_t qq = static_cast<std::size_t>(q);
    if (n % qq != 0) throw grid_error("measure_concentration: sample count not divisible by q");
    const std::size_t bin = n / qq;
    TaiConcentration result;
    std::vector<double> amps(qq);
    for (std::size_t b = 0; b < qq; ++b)
        amps[b] = std::abs(env.samples[b * bin + bin / 2]);
    std::size_t hot = 0;
    for (std::size_t b = 1; b < qq; ++b)
        if (amps[b] > amps[hot]) hot = b;
    result.hot_bin = hot;
    result.hot_amplitude = amps[hot];
    for (std::size_t b = 0; b < qq; ++b)
        if (b != hot) result.max_off_amplitude = std::max(result.max_off_amplitude, amps[b]);
    return result;
}

LineSpectrum tai_spectrum(const TaiDesign& design, long long m_max) {
    const Int q = design.order.q;
    if (m_max <= 0) m_max = 4 * q;
    const Int two_q = nt::checked_mul(2, q);

    LineSpectrum spec;
    spec.period = 1.0;
    spec.sample_count = 0;
    for (long long m = -m_max; m <= m_max; ++m) {
        // DFT of the levels at index m (exact twiddles).
        Complex s_m = 0.0;
        for (Int n = 0; n < q; ++n) {
            const Int units = nt::mod_floor(-2 * nt::mul_mod(m, n, q), two_q);
            s_m += design.levels.entries[static_cast<std::size_t>(n)] *
                   std::polar(1.0, pi * static_cast<double>(units) / static_cast<double>(q));
        }
        // half-bin delay of the left-aligned bins
        const Int delay_units = nt::mod_floor(-m, two_q);
        const Complex delay =
            std::polar(1.0, pi * static_cast<double>(delay_units) / static_cast<double>(q));
        const double env = sinc(static_cast<double>(m) / static_cast<double>(q)) /
                           static_cast<double>(q);
        spec.coefficients[m] = env * delay * s_m;
    }
    return spec;
}

PhaseSequence r_based_phases(const TalbotOrder& order) {
    const Int q = order.q;
    std::vector<ExactPhase> phases;
    phases.reserve(static_cast<std::size_t>(q));
    if (q == 1) {
        phases.emplace_back();
    } else {
        const Int r = nt::mod_inverse(nt::mod_floor(order.p, q), q);
        const Int two_q = nt::checked_mul(2, q);
        const bool even = nt::parity(q) == 0;
        for (Int m = 0; m < q; ++m) {
            const Int quad = even ? nt::mul_mod(m, m, two_q) : nt::mul_mod(m, m - 1, two_q);
            const Int units = nt::mul_mod(r, quad, two_q);
            phases.emplace_back(order.sigma > 0 ? units : -units, q);
        }
    }
    PhaseSequence seq = PhaseSequence::from_exact(std::move(phases));
    seq.order = order;
    return seq;
}

std::optional<ShiftAndPhase> equivalent_up_to_shift_and_phase(const PhaseSequence& a,
                                                              const PhaseSequence& b,
                                                              double tol) {
    if (a.size() != b.size())
        throw std::domain_error("equivalent_up_to_shift_and_phase: lengths differ");
    const long long q = static_cast<long long>(a.size());
    for (long long shift = 0; shift < q; ++shift) {
        const Complex g = a.entries[0] / b.at(shift);
        bool ok = true;
        for (long long n = 0; n < q && ok; ++n)
            ok = std::abs(a.entries[static_cast<std::size_t>(n)] - g * b.at(n + shift)) <= tol;
        if (ok) return ShiftAndPhase{static_cast<std::size_t>(shift), g};
    }
    return std::nullopt;
}

PhaseSequence leger_phases(Int q, int sigma) {
    if (q < 1) throw std::domain_error("leger_phases: q must be positive");
    if (sigma != +1 && sigma != -1) throw std::domain_error("leger_phases: sigma must be +1 or -1");
    const int e_q = nt::parity(q);
    std::vector<ExactPhase> phases;
    phases.reserve(static_cast<std::size_t>(q));
    for (Int n = 0; n < q; ++n) {
        ExactPhase total = quadratic_phase(1, n, q, sigma);
        if (e_q == 1 && nt::parity(n) == 1) total = total.plus_pi();
        phases.push_back(total);
    }
    return PhaseSequence::from_exact(std::move(phases));
}

SpectralTalbotFamily spectral_talbot_phases(const TalbotOrder& order, Int length) {
    if (length < 1) throw std::domain_error("spectral_talbot_phases: length must be positive");
    const Int q = order.q;
    std::vector<ExactPhase> phases;
    phases.reserve(static_cast<std::size_t>(length));
    for (Int n = 0; n < length; ++n)
        phases.push_back(quadratic_phase(order.p, n, q, order.sigma));

    // Minimal period of the infinite family: smallest divisor of 2q that
    // reproduces every phase.
    const Int two_q = nt::checked_mul(2, q);
    Int minimal = two_q;
    for (Int cand = 1; cand < two_q; ++cand) {
        if (two_q % cand != 0) continue;
        bool periodic = true;
        for (Int n = 0; n < two_q && periodic; ++n)
            periodic = quadratic_phase(order.p, n + cand, q, order.sigma) ==
                       quadratic_phase(order.p, n, q, order.sigma);
        if (periodic) {
            minimal = cand;
            break;
        }
    }

    SpectralTalbotFamily family;
    family.phases = PhaseSequence::from_exact(std::move(phases));
    family.phases.order = order;
    family.minimal_period = minimal;
    return family;
}

} // namespace talbot
