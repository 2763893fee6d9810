// talbot - command-line front end: s tables, Gauss-sum phase sequences,
// TAI design runs, envelope simulation and the verification sweeps.
//
// Exit codes: 0 success (and all checks passed), 1 a verification check
// failed, 2 usage or domain error, 3 data/grid error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "talbot/field.hpp"
#include "talbot/gauss_phase.hpp"
#include "talbot/io.hpp"
#include "talbot/tai.hpp"
#include "talbot/talbot_s.hpp"
#include "talbot/verify.hpp"

namespace {

using talbot::nt::Int;

struct OrderSpec {
    Int p = 0;
    Int q = 0;
    bool reduced = false;
};

// "p/q" with positive integers; the fraction is reduced to lowest terms.
OrderSpec parse_fraction(const std::string& text) {
    OrderSpec spec;
    char extra;
    long long p, q;
    if (std::sscanf(text.c_str(), "%lld/%lld%c", &p, &q, &extra) != 2 || p < 1 || q < 1)
        throw std::domain_error("order must look like p/q with positive integers");
    const Int g = talbot::nt::gcd(p, q);
    spec.p = p / g;
    spec.q = q / g;
    spec.reduced = g > 1;
    return spec;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        talbot::io::write_file(out_path, content);
}

std::string stem_of(const std::string& path) {
    const std::size_t slash = path.find_last_of("/\\");
    const std::size_t dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path;
    return path.substr(0, dot);
}

int run_s_table(Int q_max, Int p_max, const std::string& format, const std::string& out) {
    const talbot::STable table = talbot::s_table(q_max, p_max);
    emit(format == "json" ? talbot::io::s_table_json(table) : talbot::io::s_table_csv(table),
         out);
    return 0;
}

int run_phases(const talbot::TalbotOrder& order, const std::string& format,
               const std::string& out) {
    const talbot::PhaseSequence x = talbot::talbot_phases(order);
    const talbot::PhaseSequence w = talbot::spectral_weights(order);
    emit(format == "json" ? talbot::io::dft_pair_json(x, w) : talbot::io::dft_pair_csv(x, w),
         out);
    return 0;
}

int run_tai(const talbot::TalbotOrder& order, std::size_t samples_per_bin,
            std::string prefix, double tol) {
    const talbot::TaiDesign design = talbot::tai_phases(order);
    const talbot::PeriodicEnvelope out = talbot::tai_forward(design, samples_per_bin);
    const talbot::TaiConcentration conc = talbot::measure_concentration(out, order.q);

    if (prefix.empty())
        prefix = "tai_" + std::to_string(order.p) + "_" + std::to_string(order.q);
    talbot::io::write_file(prefix + ".design.json", talbot::io::tai_design_json(design));
    talbot::io::write_file(prefix + ".trace.csv", talbot::io::trace_csv(out));

    const double root_q = std::sqrt(static_cast<double>(order.q));
    const bool pass =
        std::abs(conc.hot_amplitude - root_q) <= tol && conc.max_off_amplitude <= tol;
    std::printf("%s concentration: hot_bin=%zu amplitude=%.12g gain=%.12g residual=%.3e\n",
                pass ? "PASS" : "FAIL", conc.hot_bin, conc.hot_amplitude,
                conc.hot_amplitude * conc.hot_amplitude, conc.max_off_amplitude);
    std::printf("wrote %s.design.json and %s.trace.csv\n", prefix.c_str(), prefix.c_str());
    return pass ? 0 : 1;
}

int run_simulate(const std::string& input, const OrderSpec& spec, int sigma,
                 const std::string& mode, std::string out) {
    const talbot::TalbotOrder order(spec.p, spec.q, sigma);
    const talbot::PeriodicEnvelope env = talbot::io::read_envelope(input);
    if (out.empty()) out = stem_of(input) + ".out.csv";

    const bool half_shift =
        talbot::nt::parity(order.p) == 1 && talbot::nt::parity(order.q) == 1;
    if (mode == "propagate") {
        talbot::io::write_envelope(talbot::propagate(env, order), out);
        std::printf("wrote %s\n", out.c_str());
        return 0;
    }
    if (mode == "reconstruct") {
        talbot::io::write_envelope(talbot::reconstruct_fractional(env, order), out);
        if (half_shift) std::printf("note: half-period shift applied (p*q odd)\n");
        std::printf("wrote %s\n", out.c_str());
        return 0;
    }
    // both
    const talbot::PeriodicEnvelope prop = talbot::propagate(env, order);
    const talbot::PeriodicEnvelope recon = talbot::reconstruct_fractional(env, order);
    const std::string recon_path = stem_of(out) + ".recon.csv";
    talbot::io::write_envelope(prop, out);
    talbot::io::write_envelope(recon, recon_path);
    if (half_shift) std::printf("note: half-period shift applied (p*q odd)\n");
    const talbot::CompareMetrics m = talbot::compare(prop, recon);
    std::printf("compare: l_inf=%.6e l2=%.6e peak_ratio=%.12g\n", m.l_inf, m.l2, m.peak_ratio);
    std::printf("wrote %s and %s\n", out.c_str(), recon_path.c_str());
    return 0;
}

int run_verify(const std::string& suite, Int q_max, double tol_override) {
    namespace v = talbot::verify;
    const auto tol = [tol_override](double fallback) {
        return tol_override > 0.0 ? tol_override : fallback;
    };
    std::vector<v::Report> reports;
    const bool all = suite == "all";

    if (all || suite == "s") {
        reports.push_back(v::uniqueness_of_s(q_max));
        reports.push_back(v::s_periodicity(q_max));
        reports.push_back(v::s_self_duality(q_max));
    }
    if (all || suite == "dft") {
        reports.push_back(v::dft_pair(q_max, tol(1e-10)));
        reports.push_back(v::global_phase_forms(q_max, tol(1e-12)));
    }
    if (all || suite == "autocorr") {
        reports.push_back(v::autocorrelation_delta(q_max, tol(1e-10)));
        reports.push_back(v::flat_spectrum(q_max, tol(1e-10)));
        reports.push_back(v::chu_membership(q_max, tol(1e-9)));
    }
    if (all || suite == "appendixB") {
        reports.push_back(v::alt_s_equivalence(q_max, q_max));
    }
    if (all || suite == "props") {
        reports.push_back(v::closed_form_series(q_max));
        reports.push_back(v::complementary_orders(q_max));
        reports.push_back(v::r_family_equivalence(q_max, tol(1e-10)));
        reports.push_back(v::r_s_relation(q_max));
        reports.push_back(v::leger_family(q_max, tol(1e-10)));
        reports.push_back(v::spectral_family_periods(q_max));
    }
    if (all || suite == "tai") {
        reports.push_back(v::tai_concentration(q_max, 16, tol(1e-9)));
        reports.push_back(v::tai_spectral_check(q_max, tol(1e-9)));
        reports.push_back(v::bin_interference(q_max, tol(1e-10)));
    }
    if (all) {
        // O(N^2) envelope sweeps; capped at the documented bound
        const Int q_cap = std::min<Int>(q_max, 16);
        reports.push_back(v::propagation_equivalence(q_cap, tol(1e-9)));
        reports.push_back(v::propagation_unitarity(q_cap, tol(1e-10)));
        reports.push_back(v::propagation_composition(q_cap, tol(1e-10)));
    }

    int failed = 0;
    for (const v::Report& r : reports) {
        std::printf("%s\n", v::format(r).c_str());
        if (!r.pass) ++failed;
    }
    std::printf("%d/%zu properties passed\n", static_cast<int>(reports.size()) - failed,
                reports.size());
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quadratic Gauss-sum toolkit for fractional Talbot self-imaging"};
    app.require_subcommand(1);
    int rc = 0;

    // s-table
    auto* cmd_table = app.add_subcommand("s-table", "table of the integer s over (p, q)");
    Int table_qmax = 0, table_pmax = 10;
    std::string table_format = "csv", table_out;
    cmd_table->add_option("--qmax", table_qmax, "largest q (rows start at q=2)")
        ->required()
        ->check(CLI::Range(Int(2), Int(1000000)));
    cmd_table->add_option("--pmax", table_pmax, "largest p")
        ->check(CLI::Range(Int(1), Int(1000000)));
    cmd_table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));
    cmd_table->add_option("--out", table_out, "output file (default: stdout)");
    cmd_table->callback([&] { rc = run_s_table(table_qmax, table_pmax, table_format, table_out); });

    // phases
    auto* cmd_phases = app.add_subcommand("phases", "Gauss-sum phase sequence and its DFT");
    Int ph_p = 0, ph_q = 0;
    int ph_sigma = +1;
    std::string ph_order, ph_format = "json", ph_out;
    cmd_phases->add_option("p", ph_p, "numerator of the Talbot order");
    cmd_phases->add_option("q", ph_q, "denominator of the Talbot order");
    cmd_phases->add_option("--order", ph_order, "order as a fraction p/q (reduced if needed)");
    cmd_phases->add_option("--sign", ph_sigma, "dispersion sign")->check(CLI::IsMember({1, -1}));
    cmd_phases->add_option("--format", ph_format)->check(CLI::IsMember({"csv", "json"}));
    cmd_phases->add_option("--out", ph_out, "output file (default: stdout)");
    cmd_phases->callback([&] {
        if (!ph_order.empty()) {
            const OrderSpec spec = parse_fraction(ph_order);
            if (spec.reduced)
                std::fprintf(stderr, "note: order reduced to %lld/%lld\n",
                             static_cast<long long>(spec.p), static_cast<long long>(spec.q));
            rc = run_phases(talbot::TalbotOrder(spec.p, spec.q, ph_sigma), ph_format, ph_out);
        } else {
            if (ph_p < 1 || ph_q < 1)
                throw std::domain_error("phases: give positive `p q` or --order p/q");
            rc = run_phases(talbot::TalbotOrder(ph_p, ph_q, ph_sigma), ph_format, ph_out);
        }
    });

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run a verification sweep");
    std::string suite;
    Int verify_qmax = 32;
    double verify_tol = 0.0;
    cmd_verify->add_option("suite", suite, "s|dft|autocorr|appendixB|props|tai|all")
        ->required()
        ->check(CLI::IsMember({"s", "dft", "autocorr", "appendixB", "props", "tai", "all"}));
    cmd_verify->add_option("--qmax", verify_qmax)->check(CLI::Range(Int(1), Int(4096)));
    cmd_verify->add_option("--tolerance", verify_tol,
                           "override for numeric checks (exact checks stay exact)");
    cmd_verify->callback([&] { rc = run_verify(suite, verify_qmax, verify_tol); });

    // tai
    auto* cmd_tai = app.add_subcommand("tai", "design and verify an array illuminator");
    Int tai_p = 0, tai_q = 0;
    int tai_sigma = +1;
    std::size_t tai_spb = 16;
    std::string tai_prefix;
    double tai_tol = 1e-9;
    cmd_tai->add_option("p", tai_p)->required();
    cmd_tai->add_option("q", tai_q)->required();
    cmd_tai->add_option("--sign", tai_sigma)->check(CLI::IsMember({1, -1}));
    cmd_tai->add_option("--samples-per-bin", tai_spb)->check(CLI::Range(std::size_t(2), std::size_t(65536)));
    cmd_tai->add_option("--out-prefix", tai_prefix, "prefix for design/trace files");
    cmd_tai->add_option("--tolerance", tai_tol);
    cmd_tai->callback([&] {
        rc = run_tai(talbot::TalbotOrder(tai_p, tai_q, tai_sigma), tai_spb, tai_prefix, tai_tol);
    });

    // simulate
    auto* cmd_sim = app.add_subcommand("simulate", "propagate an envelope file");
    std::string sim_input, sim_order, sim_mode = "propagate", sim_out;
    int sim_sigma = +1;
    cmd_sim->add_option("input", sim_input, "envelope CSV (with JSON sidecar)")->required();
    cmd_sim->add_option("--order", sim_order, "Talbot order p/q")->required();
    cmd_sim->add_option("--sign", sim_sigma)->check(CLI::IsMember({1, -1}));
    cmd_sim->add_option("--mode", sim_mode)
        ->check(CLI::IsMember({"propagate", "reconstruct", "both"}));
    cmd_sim->add_option("--out", sim_out, "output envelope CSV path");
    cmd_sim->callback([&] {
        const OrderSpec spec = parse_fraction(sim_order);
        if (spec.reduced)
            std::fprintf(stderr, "note: order reduced to %lld/%lld\n",
                         static_cast<long long>(spec.p), static_cast<long long>(spec.q));
        rc = run_simulate(sim_input, spec, sim_sigma, sim_mode, sim_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const talbot::grid_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
