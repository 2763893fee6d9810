#include "talbot/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>

#include "talbot/field.hpp"
#include "talbot/gauss_phase.hpp"
#include "talbot/parallel.hpp"
#include "talbot/tai.hpp"

namespace talbot::verify {

using nt::Int;

namespace {

constexpr double pi = std::numbers::pi;

// Per-work-item outcome; merged in index order so reports are
// deterministic under any thread schedule.
struct Outcome {
    long long cases = 0;
    double worst = 0.0;
    bool pass = true;
    std::string fail;
};

void note_failure(Outcome& o, const std::string& what) {
    if (o.pass) o.fail = what;
    o.pass = false;
}

Report merge(std::string name, const std::vector<Outcome>& parts) {
    Report r;
    r.name = std::move(name);
    r.pass = true;
    for (const Outcome& o : parts) {
        r.cases += o.cases;
        r.worst = std::max(r.worst, o.worst);
        if (!o.pass && r.pass) {
            r.pass = false;
            r.detail = o.fail;
        }
    }
    return r;
}

std::vector<Int> coprime_p_values(Int q, Int p_hi) {
    std::vector<Int> ps;
    for (Int p = 1; p <= p_hi; ++p)
        if (nt::gcd(p, q) == 1) ps.push_back(p);
    return ps;
}

std::string pair_label(Int p, Int q, int sigma = 0) {
    char buf[96];
    if (sigma == 0)
        std::snprintf(buf, sizeof buf, "(p=%lld, q=%lld)", static_cast<long long>(p),
                      static_cast<long long>(q));
    else
        std::snprintf(buf, sizeof buf, "(p=%lld, q=%lld, sigma=%+d)", static_cast<long long>(p),
                      static_cast<long long>(q), sigma);
    return buf;
}

// Sweep q in [q_lo, q_max] in parallel, one outcome slot per q.
template <typename Fn>
Report sweep_q(std::string name, Int q_lo, Int q_max, Fn&& per_q) {
    if (q_max < q_lo) return {std::move(name), true, 0, 0.0, "empty range"};
    const std::size_t count = static_cast<std::size_t>(q_max - q_lo + 1);
    std::vector<Outcome> parts(count);
    detail::parallel_for(count, [&](std::size_t i) {
        per_q(q_lo + static_cast<Int>(i), parts[i]);
    });
    return merge(std::move(name), parts);
}

PeriodicEnvelope random_band_limited(std::size_t n, std::mt19937& rng) {
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    LineSpectrum spec;
    spec.period = 1.0;
    spec.sample_count = n;
    const long long h_max = std::max<long long>(1, static_cast<long long>(n) / 8);
    for (long long h = -h_max; h <= h_max; ++h)
        spec.coefficients[h] = Complex(amp(rng), amp(rng));
    return synthesize(spec);
}

PeriodicEnvelope random_cell_in_first_bin(std::size_t n, Int q, std::mt19937& rng) {
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    std::vector<Complex> samples(n, Complex(0.0, 0.0));
    const std::size_t bin = n / static_cast<std::size_t>(q);
    for (std::size_t k = 0; k < bin; ++k) samples[k] = Complex(amp(rng), amp(rng));
    return PeriodicEnvelope(1.0, std::move(samples));
}

double sinc(double x) {
    if (x == 0.0) return 1.0;
    return std::sin(pi * x) / (pi * x);
}

} // namespace

Report uniqueness_of_s(Int q_max) {
    return sweep_q("s-uniqueness", 2, q_max, [](Int q, Outcome& o) {
        for (Int p : coprime_p_values(q, 2 * q)) {
            const TalbotOrder order(p, q);
            Int hits = 0, found = -1;
            for (Int s = 1; s <= 2 * q - 1; ++s) {
                if (verify_s(order, s)) {
                    ++hits;
                    found = s;
                }
            }
            ++o.cases;
            if (hits != 1 || found != compute_s(order).s)
                note_failure(o, pair_label(p, q) + ": solution count " + std::to_string(hits));
        }
    });
}

Report s_periodicity(Int q_max) {
    return sweep_q("s-periodicity", 2, q_max, [](Int q, Outcome& o) {
        for (Int p : coprime_p_values(q, 2 * q)) {
            const Int s = compute_s(TalbotOrder(p, q)).s;
            ++o.cases;
            if (compute_s(TalbotOrder(p + 2 * q, q)).s != s)
                note_failure(o, pair_label(p, q) + ": p+2q changes s");
            if (nt::parity(q) == 1 && compute_s(TalbotOrder(p + q, q)).s != s)
                note_failure(o, pair_label(p, q) + ": p+q changes s for odd q");
        }
    });
}

Report s_self_duality(Int q_max) {
    return sweep_q("s-self-duality", 2, q_max, [](Int q, Outcome& o) {
        for (Int p : {q - 1, q + 1}) {
            if (p < 1) continue;
            ++o.cases;
            if (compute_s(TalbotOrder(p, q)).s != p)
                note_failure(o, pair_label(p, q) + ": s != p at self-dual order");
        }
    });
}

Report alt_s_equivalence(Int q_max, Int p_max) {
    Report r = sweep_q("alt-s-equivalence", 2, q_max, [p_max](Int q, Outcome& o) {
        for (Int p = 1; p <= p_max; ++p) {
            if (nt::gcd(p, q) != 1) continue;
            const TalbotOrder order(p, q);
            ++o.cases;
            if (compute_s_alt(order) != compute_s(order).s)
                note_failure(o, pair_label(p, q) + ": squared-inverse form disagrees");
        }
    });
    if (r.pass) r.detail = "odd/odd, odd/even and even/odd parities all covered";
    return r;
}

Report closed_form_series(Int q_max) {
    Report r = sweep_q("closed-form-series", 2, q_max, [](Int q, Outcome& o) {
        for (Int p : coprime_p_values(q, 2 * q)) {
            const TalbotOrder order(p, q);
            const auto closed = closed_form_s(order);
            if (!closed) continue;
            ++o.cases;
            if (*closed != compute_s(order).s)
                note_failure(o, pair_label(p, q) + ": closed form disagrees");
        }
    });
    return r;
}

Report complementary_orders(Int q_max) {
    return sweep_q("complementary-orders", 2, q_max, [](Int q, Outcome& o) {
        for (Int p : coprime_p_values(q, q - 1)) {
            const TalbotOrder order(p, q);
            ++o.cases;
            if (complement_s(order) != compute_s(TalbotOrder(q - p, q)).s)
                note_failure(o, pair_label(p, q) + ": complement rule disagrees");
        }
    });
}

Report dft_pair(Int q_max, double tol) {
    return sweep_q("dft-pair", 1, q_max, [tol](Int q, Outcome& o) {
        for (Int p : coprime_p_values(q, 2 * q)) {
            for (int sigma : {+1, -1}) {
                const TalbotOrder order(p, q, sigma);
                const PhaseSequence x = talbot_phases(order);
                const PhaseSequence w = spectral_weights(order);
                const std::vector<Complex> d = dft(x);
                ++o.cases;
                for (Int m = 0; m < q; ++m) {
                    const double err =
                        std::abs(d[static_cast<std::size_t>(m)] -
                                 w.gain * w.entries[static_cast<std::size_t>(m)]);
                    o.worst = std::max(o.worst, err);
                    if (err > tol)
                        note_failure(o, pair_label(p, q, sigma) + ": dft(x) != X");
                }
                for (Int n = 0; n < q; ++n) {
                    const double err = std::abs(x.entries[static_cast<std::size_t>(n)] -
                                                gauss_sum_direct(order, n));
                    o.worst = std::max(o.worst, err);
                    if (err > tol)
                        note_failure(o, pair_label(p, q, sigma) + ": x != direct Gauss sum");
                }
            }
        }
    });
}

Report global_phase_forms(Int q_max, double tol) {
    return sweep_q("global-phase-forms", 1, q_max, [tol](Int q, Outcome& o) {
        for (Int p : coprime_p_values(q, 2 * q)) {
            const TalbotOrder order(p, q);
            const ExactPhase a = xi0(order);
            ++o.cases;
            if (!(a == xi0_p_form(order)))
                note_failure(o, pair_label(p, q) + ": s-form and p-form differ");
            const double err = std::abs(a.unit() - xi0_bruteforce(compute_s(order).s, q));
            o.worst = std::max(o.worst, err);
            if (err > tol) note_failure(o, pair_label(p, q) + ": brute-force sum differs");
        }
    });
}

Report autocorrelation_delta(Int q_max, double tol) {
    return sweep_q("perfect-autocorrelation", 1, q_max, [tol](Int q, Outcome& o) {
        for (Int p : coprime_p_values(q, 2 * q)) {
            for (int sigma : {+1, -1}) {
                const TalbotOrder order(p, q, sigma);
                for (const PhaseSequence& seq :
                     {talbot_phases(order), spectral_weights(order)}) {
                    const std::vector<Complex> r = periodic_autocorrelation(seq.entries);
                    ++o.cases;
                    for (Int n = 0; n < q; ++n) {
                        const Complex want(n == 0 ? static_cast<double>(q) : 0.0, 0.0);
                        const double err = std::abs(r[static_cast<std::size_t>(n)] - want);
                        o.worst = std::max(o.worst, err);
                        if (err > tol)
                            note_failure(o, pair_label(p, q, sigma) + ": R != q*delta");
                    }
                }
            }
        }
    });
}

Report flat_spectrum(Int q_max, double tol) {
    return sweep_q("flat-spectrum", 1, q_max, [tol](Int q, Outcome& o) {
        const double root_q = std::sqrt(static_cast<double>(q));
        for (Int p : coprime_p_values(q, 2 * q)) {
            for (int sigma : {+1, -1}) {
                const std::vector<Complex> d = dft(talbot_phases(TalbotOrder(p, q, sigma)));
                ++o.cases;
                for (const Complex& z : d) {
                    const double err = std::abs(std::abs(z) - root_q);
                    o.worst = std::max(o.worst, err);
                    if (err > tol)
                        note_failure(o, pair_label(p, q, sigma) + ": spectrum not flat");
                }
            }
        }
    });
}

Report chu_membership(Int q_max, double tol) {
    return sweep_q("chu-membership", 1, q_max, [tol](Int q, Outcome& o) {
        for (Int p : coprime_p_values(q, 2 * q)) {
            for (int sigma : {+1, -1}) {
                const TalbotOrder order(p, q, sigma);
                ++o.cases;
                if (!is_chu_equivalent(talbot_phases(order).entries, tol))
                    note_failure(o, pair_label(p, q, sigma) + ": x_n not Chu-equivalent");
                if (!is_chu_equivalent(spectral_weights(order).entries, tol))
                    note_failure(o, pair_label(p, q, sigma) + ": X_m not Chu-equivalent");
            }
        }
    });
}

Report r_family_equivalence(Int q_max, double tol) {
    return sweep_q("r-family-equivalence", 1, q_max, [tol](Int q, Outcome& o) {
        for (Int p : coprime_p_values(q, 2 * q)) {
            for (int sigma : {+1, -1}) {
                const TalbotOrder order(p, q, sigma);
                const auto match = equivalent_up_to_shift_and_phase(
                    talbot_phases(order), r_based_phases(order), tol);
                ++o.cases;
                if (!match)
                    note_failure(o, pair_label(p, q, sigma) + ": no shift/phase match");
                else
                    o.worst = std::max(o.worst, std::abs(std::abs(match->global_phase) - 1.0));
            }
        }
    });
}

Report r_s_relation(Int q_max) {
    return sweep_q("r-s-relation", 2, q_max, [](Int q, Outcome& o) {
        for (Int p : coprime_p_values(q, 2 * q)) {
            const Int s = compute_s(TalbotOrder(p, q)).s;
            const Int r = nt::mod_inverse(nt::mod_floor(p, q), q);
            ++o.cases;
            if (nt::parity(q) == 1) {
                if (s != nt::mod_floor(r + q * nt::parity(r), 2 * q))
                    note_failure(o, pair_label(p, q) + ": s != r + q*e_r (mod 2q)");
            } else {
                if (nt::mod_floor(s, q) != r || nt::parity(s) != 1)
                    note_failure(o, pair_label(p, q) + ": s not in {r, r+q} with s odd");
            }
        }
    });
}

Report leger_family(Int q_max, double tol) {
    return sweep_q("alternating-family", 1, q_max, [tol](Int q, Outcome& o) {
        for (int sigma : {+1, -1}) {
            const auto match = equivalent_up_to_shift_and_phase(
                talbot_phases(TalbotOrder(1, q, sigma)), leger_phases(q, sigma), tol);
            ++o.cases;
            if (!match || match->shift != 0)
                note_failure(o, "q=" + std::to_string(q) + ": expected zero-shift match");
        }
    });
}

Report spectral_family_periods(Int q_max) {
    return sweep_q("quadratic-modulation-family", 1, q_max, [](Int q, Outcome& o) {
        for (Int p : coprime_p_values(q, 2 * q)) {
            for (int sigma : {+1, -1}) {
                const TalbotOrder order(p, q, sigma);
                const auto family = spectral_talbot_phases(order, q);
                const Int expected = nt::parity(p * q) == 0 ? q : 2 * q;
                ++o.cases;
                if (family.minimal_period != expected)
                    note_failure(o, pair_label(p, q, sigma) + ": period " +
                                        std::to_string(family.minimal_period) + " != " +
                                        std::to_string(expected));
            }
        }
        // self-dual orders: the modulation family equals the pure s-quadratic
        for (Int p : {q - 1, q + 1}) {
            if (p < 1) continue;
            for (int sigma : {+1, -1}) {
                const TalbotOrder order(p, q, sigma);
                const Int s = compute_s(order).s;
                const auto family = spectral_talbot_phases(order, q);
                ++o.cases;
                for (Int n = 0; n < q; ++n)
                    if (!((*family.phases.exact)[static_cast<std::size_t>(n)] ==
                          quadratic_phase(s, n, q, sigma)))
                        note_failure(o, pair_label(p, q, sigma) + ": self-dual family differs");
            }
        }
    });
}

Report bin_interference(Int q_max, double tol) {
    return sweep_q("bin-interference", 1, q_max, [tol](Int q, Outcome& o) {
        for (Int p : coprime_p_values(q, 2 * q)) {
            for (int sigma : {+1, -1}) {
                const PhaseSequence x = talbot_phases(TalbotOrder(p, q, sigma));
                ++o.cases;
                for (Int k = 0; k < 2 * q; ++k) {
                    Complex acc = 0.0;
                    for (Int n = 0; n < q; ++n)
                        acc += x.at(k - n) * std::conj(x.entries[static_cast<std::size_t>(n)]);
                    const Complex want(k % q == 0 ? static_cast<double>(q) : 0.0, 0.0);
                    const double err = std::abs(acc - want);
                    o.worst = std::max(o.worst, err);
                    if (err > tol)
                        note_failure(o, pair_label(p, q, sigma) + ": interference sum off");
                }
            }
        }
    });
}

Report tai_concentration(Int q_max, std::size_t samples_per_bin, double tol) {
    return sweep_q("tai-concentration", 1, q_max, [=](Int q, Outcome& o) {
        const double root_q = std::sqrt(static_cast<double>(q));
        for (Int p : coprime_p_values(q, 2 * q)) {
            for (int sigma : {+1, -1}) {
                const TalbotOrder order(p, q, sigma);
                const PeriodicEnvelope out = tai_forward(tai_phases(order), samples_per_bin);
                const TaiConcentration c = measure_concentration(out, q);
                ++o.cases;
                const double amp_err = std::abs(c.hot_amplitude - root_q);
                const double gain_err =
                    std::abs(c.hot_amplitude * c.hot_amplitude - static_cast<double>(q));
                o.worst = std::max({o.worst, amp_err, c.max_off_amplitude});
                if (amp_err > tol || c.max_off_amplitude > tol || gain_err > 3.0 * root_q * tol)
                    note_failure(o, pair_label(p, q, sigma) + ": field not concentrated");
            }
        }
    });
}

Report tai_spectral_check(Int q_max, double tol) {
    return sweep_q("tai-spectral-check", 1, q_max, [tol](Int q, Outcome& o) {
        const Int two_q = 2 * q;
        const double root_q = std::sqrt(static_cast<double>(q));
        for (Int p : coprime_p_values(q, 2 * q)) {
            for (int sigma : {+1, -1}) {
                const TalbotOrder order(p, q, sigma);
                const int e_pq = nt::parity(p) & nt::parity(q);
                const LineSpectrum spec = tai_spectrum(tai_phases(order), 3 * q);
                ++o.cases;
                for (const auto& [m, c] : spec.coefficients) {
                    // dispersive line factor exp(-j*pi*sigma*(p/q)*m^2)
                    const Int quad = nt::mul_mod(p, nt::mul_mod(m, m, two_q), two_q);
                    const Complex h = std::polar(
                        1.0, -sigma * pi * static_cast<double>(quad) / static_cast<double>(q));
                    // chirp-free rect train of width T/q at offset e_pq*T/2
                    const Int delay_units = nt::mod_floor(-m - m * e_pq * q, two_q);
                    const Complex want =
                        sinc(static_cast<double>(m) / static_cast<double>(q)) / root_q *
                        std::polar(1.0, pi * static_cast<double>(delay_units) /
                                            static_cast<double>(q));
                    const double err = std::abs(c * h - want);
                    o.worst = std::max(o.worst, err);
                    if (err > tol)
                        note_failure(o, pair_label(p, q, sigma) + ": dispersed line mismatch");
                }
            }
        }
    });
}

Report propagation_equivalence(Int q_max, double tol, unsigned seed) {
    return sweep_q("propagation-equivalence", 1, q_max, [=](Int q, Outcome& o) {
        std::mt19937 rng(seed + static_cast<unsigned>(q));
        const std::size_t n = 64 * static_cast<std::size_t>(q);
        std::vector<PeriodicEnvelope> cells;
        cells.push_back(random_band_limited(n, rng));
        cells.push_back(random_band_limited(n, rng));
        cells.push_back(random_cell_in_first_bin(n, q, rng));
        for (Int p : coprime_p_values(q, 2 * q)) {
            for (int sigma : {+1, -1}) {
                const TalbotOrder order(p, q, sigma);
                for (const PeriodicEnvelope& cell : cells) {
                    const CompareMetrics m =
                        compare(propagate(cell, order), reconstruct_fractional(cell, order));
                    ++o.cases;
                    o.worst = std::max(o.worst, m.l_inf);
                    if (m.l_inf > tol)
                        note_failure(o, pair_label(p, q, sigma) + ": routes disagree");
                }
            }
        }
    });
}

Report propagation_unitarity(Int q_max, double tol, unsigned seed) {
    return sweep_q("propagation-unitarity", 1, q_max, [=](Int q, Outcome& o) {
        std::mt19937 rng(seed + static_cast<unsigned>(q));
        const std::size_t n = 16 * static_cast<std::size_t>(q);
        const PeriodicEnvelope env = random_band_limited(n, rng);
        const LineSpectrum before = analyze(env);
        for (Int p : coprime_p_values(q, 2 * q)) {
            const PeriodicEnvelope out = propagate(env, TalbotOrder(p, q));
            const LineSpectrum after = analyze(out);
            ++o.cases;
            for (const auto& [h, c] : before.coefficients) {
                const double err = std::abs(std::abs(after.coefficients.at(h)) - std::abs(c));
                o.worst = std::max(o.worst, err);
                if (err > tol)
                    note_failure(o, pair_label(p, q) + ": line magnitude changed");
            }
            const double drift =
                std::abs(out.mean_power() - env.mean_power()) / env.mean_power();
            if (drift > 1e-12)
                note_failure(o, pair_label(p, q) + ": energy drift " + std::to_string(drift));
        }
    });
}

Report propagation_composition(Int q_max, double tol, unsigned seed) {
    return sweep_q("propagation-composition", 1, q_max, [=](Int q, Outcome& o) {
        std::mt19937 rng(seed + static_cast<unsigned>(q));
        const std::size_t n = 16 * static_cast<std::size_t>(q);
        const PeriodicEnvelope env = random_band_limited(n, rng);

        // composition: successive orders p1/q then p2/q equal (p1+p2)/q
        std::vector<Int> ps = coprime_p_values(q, q);
        if (ps.size() > 3) ps.resize(3);
        for (Int p1 : ps) {
            for (Int p2 : ps) {
                if (nt::gcd(p1 + p2, q) != 1) continue;
                const PeriodicEnvelope two_step =
                    propagate(propagate(env, TalbotOrder(p1, q)), TalbotOrder(p2, q));
                const PeriodicEnvelope one_step = propagate(env, TalbotOrder(p1 + p2, q));
                const CompareMetrics m = compare(two_step, one_step);
                ++o.cases;
                o.worst = std::max(o.worst, m.l_inf);
                if (m.l_inf > tol)
                    note_failure(o, pair_label(p1 + p2, q) + ": composition mismatch");
            }
        }

        // periodicity: p and p + 2q give the same transfer function
        for (Int p : ps) {
            const CompareMetrics m = compare(propagate(env, TalbotOrder(p, q)),
                                             propagate(env, TalbotOrder(p + 2 * q, q)));
            ++o.cases;
            o.worst = std::max(o.worst, m.l_inf);
            if (m.l_inf > tol)
                note_failure(o, pair_label(p, q) + ": p+2q changes the output");
        }
    });
}

std::string format(const Report& report) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-4s %-28s cases=%-8lld worst=%.3e%s%s",
                  report.pass ? "PASS" : "FAIL", report.name.c_str(), report.cases, report.worst,
                  report.detail.empty() ? "" : "  ", report.detail.c_str());
    return buf;
}

} // namespace talbot::verify
