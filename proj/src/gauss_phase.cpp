#include "talbot/gauss_phase.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace talbot {

using nt::Int;

namespace {

constexpr double pi = std::numbers::pi;

// exp(j*pi*units/den) with units already reduced mod 2*den.
Complex unit_phase(Int units, Int den) {
    return std::polar(1.0, pi * static_cast<double>(units) / static_cast<double>(den));
}

} // namespace

Complex PhaseSequence::at(long long n) const {
    if (entries.empty()) throw std::domain_error("PhaseSequence::at: empty sequence");
    const long long q = static_cast<long long>(entries.size());
    return entries[static_cast<std::size_t>(((n % q) + q) % q)];
}

PhaseSequence PhaseSequence::from_exact(std::vector<ExactPhase> phases, double gain) {
    PhaseSequence seq;
    seq.entries.reserve(phases.size());
    for (const auto& ph : phases) seq.entries.push_back(ph.unit());
    seq.exact = std::move(phases);
    seq.gain = gain;
    return seq;
}

ExactPhase xi0(const TalbotOrder& order) {
    const Int q = order.q;
    if (q == 1) return {};
    const Int s = compute_s(order).s;
    ExactPhase ph = nt::parity(q) == 1 ? ExactPhase(q - 1, 4) : ExactPhase(-s, 4);
    const int symbol = nt::parity(q) == 1 ? nt::jacobi(s, q) : nt::jacobi(q, s);
    return symbol == -1 ? ph.plus_pi() : ph;
}

ExactPhase xi0_p_form(const TalbotOrder& order) {
    const Int p = order.p, q = order.q;
    if (q == 1) return {};
    ExactPhase ph = nt::parity(q) == 1 ? ExactPhase(q - 1, 4) : ExactPhase(-p, 4);
    const int symbol = nt::parity(q) == 1 ? nt::jacobi(p, q) : nt::jacobi(q, p);
    return symbol == -1 ? ph.plus_pi() : ph;
}

Complex xi0_bruteforce(Int s, Int q) {
    if (q < 1) throw std::domain_error("xi0_bruteforce: q must be positive");
    if (nt::gcd(s, q) != 1) throw std::domain_error("xi0_bruteforce: s, q must be coprime");
    const Int two_q = nt::checked_mul(2, q);
    Complex acc = 0.0;
    for (Int m = 0; m < q; ++m) {
        const Int units = nt::mod_floor(-nt::mul_mod(s, nt::mul_mod(m, m, two_q), two_q), two_q);
        acc += unit_phase(units, q);
    }
    return acc / std::sqrt(static_cast<double>(q));
}

PhaseSequence talbot_phases(const TalbotOrder& order) {
    const Int q = order.q;
    const Int s = compute_s(order).s;
    const ExactPhase base = xi0(order);
    std::vector<ExactPhase> phases;
    phases.reserve(static_cast<std::size_t>(q));
    for (Int n = 0; n < q; ++n) {
        ExactPhase total = base + quadratic_phase(s, n, q, +1);
        phases.push_back(order.sigma > 0 ? total : -total);
    }
    PhaseSequence seq = PhaseSequence::from_exact(std::move(phases));
    seq.order = order;
    seq.s = s;
    seq.xi0 = order.sigma > 0 ? base : -base;
    return seq;
}

PhaseSequence spectral_weights(const TalbotOrder& order) {
    const Int q = order.q;
    const Int two_q = nt::checked_mul(2, q);
    const Int coeff = nt::mul_mod(order.p, 1 + q * nt::parity(q), two_q);
    std::vector<ExactPhase> phases;
    phases.reserve(static_cast<std::size_t>(q));
    for (Int m = 0; m < q; ++m)
        phases.push_back(quadratic_phase(coeff, m, q, -order.sigma));
    PhaseSequence seq =
        PhaseSequence::from_exact(std::move(phases), std::sqrt(static_cast<double>(q)));
    seq.order = order;
    seq.s = compute_s(order).s;
    return seq;
}

Complex gauss_sum_direct(const TalbotOrder& order, Int n) {
    const Int q = order.q;
    const Int two_q = nt::checked_mul(2, q);
    const Int coeff = nt::mul_mod(order.p, 1 + q * nt::parity(q), two_q);
    Complex acc = 0.0;
    for (Int m = 0; m < q; ++m) {
        const Int quad = nt::mul_mod(coeff, nt::mul_mod(m, m, two_q), two_q);
        const Int lin = nt::mul_mod(nt::mul_mod(2, n, two_q), m, two_q);
        const Int units = nt::mod_floor(lin - order.sigma * quad, two_q);
        acc += unit_phase(units, q);
    }
    return acc / std::sqrt(static_cast<double>(q));
}

std::vector<Complex> dft(const std::vector<Complex>& x) {
    if (x.empty()) throw std::domain_error("dft: empty input");
    const Int n = static_cast<Int>(x.size());
    std::vector<Complex> out(static_cast<std::size_t>(n));
    for (Int m = 0; m < n; ++m) {
        Complex acc = 0.0;
        for (Int k = 0; k < n; ++k) {
            const Int units = nt::mod_floor(-2 * nt::mul_mod(k, m, n), nt::checked_mul(2, n));
            acc += x[static_cast<std::size_t>(k)] * unit_phase(units, n);
        }
        out[static_cast<std::size_t>(m)] = acc;
    }
    return out;
}

std::vector<Complex> idft(const std::vector<Complex>& x) {
    if (x.empty()) throw std::domain_error("idft: empty input");
    const Int n = static_cast<Int>(x.size());
    std::vector<Complex> out(static_cast<std::size_t>(n));
    for (Int k = 0; k < n; ++k) {
        Complex acc = 0.0;
        for (Int m = 0; m < n; ++m) {
            const Int units = nt::mod_floor(2 * nt::mul_mod(k, m, n), nt::checked_mul(2, n));
            acc += x[static_cast<std::size_t>(m)] * unit_phase(units, n);
        }
        out[static_cast<std::size_t>(k)] = acc / static_cast<double>(n);
    }
    return out;
}

namespace {

std::vector<Complex> with_gain(const PhaseSequence& seq) {
    std::vector<Complex> v = seq.entries;
    if (seq.gain != 1.0)
        for (auto& z : v) z *= seq.gain;
    return v;
}

} // namespace

std::vector<Complex> dft(const PhaseSequence& seq) { return dft(with_gain(seq)); }
std::vector<Complex> idft(const PhaseSequence& seq) { return idft(with_gain(seq)); }

std::vector<Complex> periodic_autocorrelation(const std::vector<Complex>& x) {
    if (x.empty()) throw std::domain_error("periodic_autocorrelation: empty input");
    const std::size_t q = x.size();
    std::vector<Complex> r(q);
    for (std::size_t n = 0; n < q; ++n) {
        Complex acc = 0.0;
        for (std::size_t k = 0; k < q; ++k) acc += std::conj(x[k]) * x[(k + n) % q];
        r[n] = acc;
    }
    return r;
}

std::vector<Complex> chu_sequence(Int N, Int M, int sign) {
    if (M < 1) throw std::domain_error("chu_sequence: length must be positive");
    if (sign != +1 && sign != -1) throw std::domain_error("chu_sequence: sign must be +1 or -1");
    if (nt::gcd(N, M) != 1) throw std::domain_error("chu_sequence: N and M must be coprime");
    const Int two_m = nt::checked_mul(2, M);
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(M));
    const bool even = nt::parity(M) == 0;
    for (Int m = 0; m < M; ++m) {
        const Int quad = even ? nt::mul_mod(m, m, two_m) : nt::mul_mod(m, m + 1, two_m);
        Int units = nt::mul_mod(N, quad, two_m);
        if (sign < 0) units = nt::mod_floor(-units, two_m);
        out.push_back(unit_phase(units, M));
    }
    return out;
}

bool is_chu_equivalent(const std::vector<Complex>& seq, double tol) {
    if (seq.empty()) throw std::domain_error("is_chu_equivalent: empty input");
    const Int q = static_cast<Int>(seq.size());
    for (Int N = 1; N <= 2 * q; ++N) {
        if (nt::gcd(N, q) != 1) continue;
        for (int sign : {+1, -1}) {
            const std::vector<Complex> chu = chu_sequence(N, q, sign);
            for (Int shift = 0; shift < q; ++shift) {
                const Complex g = seq[0] / chu[static_cast<std::size_t>(shift)];
                bool ok = true;
                for (Int n = 0; n < q && ok; ++n) {
                    const Complex want = g * chu[static_cast<std::size_t>((n + shift) % q)];
                    ok = std::abs(seq[static_cast<std::size_t>(n)] - want) <= tol;
                }
                if (ok) return true;
            }
        }
    }
    return false;
}

} // namespace talbot
