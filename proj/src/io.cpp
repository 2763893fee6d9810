#include "talbot/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace talbot::io {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json phase_sequence_to_json(const PhaseSequence& seq) {
    json doc = json::object();
    if (seq.order) {
        doc["p"] = seq.order->p;
        doc["q"] = seq.order->q;
        doc["sigma"] = seq.order->sigma;
    }
    if (seq.s) doc["s"] = *seq.s;
    if (seq.xi0) doc["xi0"] = {{"num", seq.xi0->num()}, {"den", seq.xi0->den()}};
    if (seq.gain != 1.0) doc["gain"] = seq.gain;
    json phases = json::array();
    if (seq.exact)
        for (const ExactPhase& ph : *seq.exact)
            phases.push_back({{"num", ph.num()}, {"den", ph.den()}});
    doc["phases"] = phases;
    json complex_values = json::array();
    for (const Complex& z : seq.entries) complex_values.push_back({z.real(), z.imag()});
    doc["complex"] = complex_values;
    return doc;
}

} // namespace

std::string s_table_csv(const STable& table) {
    std::ostringstream out;
    for (nt::Int p = 1; p <= table.p_max; ++p) out << ',' << p;
    out << '\n';
    for (nt::Int q = 2; q <= table.q_max; ++q) {
        out << q;
        for (nt::Int p = 1; p <= table.p_max; ++p) {
            out << ',';
            if (const auto& cell = table.at(q, p)) out << *cell;
        }
        out << '\n';
    }
    return out.str();
}

std::string s_table_json(const STable& table) {
    json doc = json::array();
    for (nt::Int q = 2; q <= table.q_max; ++q)
        for (nt::Int p = 1; p <= table.p_max; ++p)
            if (const auto& cell = table.at(q, p))
                doc.push_back({{"p", p}, {"q", q}, {"s", *cell}});
    return doc.dump(2) + "\n";
}

std::string phase_sequence_csv(const PhaseSequence& seq) {
    std::ostringstream out;
    out << "n,num,den,re,im\n";
    for (std::size_t n = 0; n < seq.size(); ++n) {
        out << n << ',';
        if (seq.exact) {
            const ExactPhase& ph = (*seq.exact)[n];
            out << ph.num() << ',' << ph.den();
        } else {
            out << ',';
        }
        out << ',' << fmt_double(seq.entries[n].real()) << ','
            << fmt_double(seq.entries[n].imag()) << '\n';
    }
    return out.str();
}

std::string phase_sequence_json(const PhaseSequence& seq, int indent) {
    return phase_sequence_to_json(seq).dump(indent) + "\n";
}

std::string dft_pair_json(const PhaseSequence& x, const PhaseSequence& w) {
    json doc;
    doc["x"] = phase_sequence_to_json(x);
    doc["X"] = phase_sequence_to_json(w);
    return doc.dump(2) + "\n";
}

std::string dft_pair_csv(const PhaseSequence& x, const PhaseSequence& w) {
    std::ostringstream out;
    if (x.order) {
        out << "# p=" << x.order->p << " q=" << x.order->q << " sigma=" << x.order->sigma;
        if (x.s) out << " s=" << *x.s;
        if (x.xi0) out << " xi0=" << x.xi0->num() << "/" << x.xi0->den() << "pi";
        out << '\n';
    }
    out << "# x_n\n" << phase_sequence_csv(x);
    out << "# X_m gain=" << fmt_double(w.gain) << '\n' << phase_sequence_csv(w);
    return out.str();
}

std::string tai_design_json(const TaiDesign& design) {
    json doc;
    doc["p"] = design.order.p;
    doc["q"] = design.order.q;
    doc["sigma"] = design.order.sigma;
    doc["s"] = design.s;
    doc["bin_width_fraction"] = "1/" + std::to_string(design.order.q);
    json levels = json::array();
    for (const ExactPhase& ph : *design.levels.exact)
        levels.push_back({{"num", ph.num()}, {"den", ph.den()}});
    doc["levels"] = levels;
    return doc.dump(2) + "\n";
}

std::string envelope_csv(const PeriodicEnvelope& env) {
    std::ostringstream out;
    out << "k,t,re,im\n";
    const double dt = env.period / static_cast<double>(env.size());
    for (std::size_t k = 0; k < env.size(); ++k) {
        out << k << ',' << fmt_double(static_cast<double>(k) * dt) << ','
            << fmt_double(env.samples[k].real()) << ',' << fmt_double(env.samples[k].imag())
            << '\n';
    }
    return out.str();
}

std::string envelope_sidecar_json(const PeriodicEnvelope& env) {
    json doc;
    doc["T"] = env.period;
    doc["N"] = env.size();
    return doc.dump(2) + "\n";
}

std::string sidecar_path(const std::string& csv_path) {
    const std::size_t slash = csv_path.find_last_of("/\\");
    const std::size_t dot = csv_path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return csv_path + ".json";
    return csv_path.substr(0, dot) + ".json";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_envelope(const PeriodicEnvelope& env, const std::string& csv_path) {
    write_file(csv_path, envelope_csv(env));
    write_file(sidecar_path(csv_path), envelope_sidecar_json(env));
}

PeriodicEnvelope read_envelope(const std::string& csv_path) {
    std::ifstream meta(sidecar_path(csv_path));
    if (!meta) throw std::invalid_argument("missing sidecar: " + sidecar_path(csv_path));
    json doc;
    try {
        meta >> doc;
    } catch (const json::exception& e) {
        throw std::invalid_argument("bad sidecar " + sidecar_path(csv_path) + ": " + e.what());
    }
    if (!doc.contains("T") || !doc.contains("N"))
        throw std::invalid_argument("sidecar needs T and N: " + sidecar_path(csv_path));
    const double period = doc["T"].get<double>();
    const std::size_t n = doc["N"].get<std::size_t>();

    std::ifstream in(csv_path);
    if (!in) throw std::invalid_argument("cannot open: " + csv_path);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty envelope file: " + csv_path);
    std::vector<Complex> samples;
    samples.reserve(n);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double k, t, re, im;
        if (std::sscanf(line.c_str(), "%lg,%lg,%lg,%lg", &k, &t, &re, &im) != 4)
            throw std::invalid_argument("bad envelope row: " + line);
        samples.emplace_back(re, im);
    }
    if (samples.size() != n)
        throw std::invalid_argument("envelope row count disagrees with sidecar N");
    return PeriodicEnvelope(period, std::move(samples));
}

std::string spectrum_csv(const LineSpectrum& spec) {
    std::ostringstream out;
    out << "n,re,im\n";
    for (const auto& [h, c] : spec.coefficients)
        out << h << ',' << fmt_double(c.real()) << ',' << fmt_double(c.imag()) << '\n';
    return out.str();
}

std::string trace_csv(const PeriodicEnvelope& env) {
    std::ostringstream out;
    out << "t,|E|,arg E\n";
    const double dt = env.period / static_cast<double>(env.size());
    for (std::size_t k = 0; k < env.size(); ++k) {
        out << fmt_double(static_cast<double>(k) * dt) << ','
            << fmt_double(std::abs(env.samples[k])) << ','
            << fmt_double(std::arg(env.samples[k])) << '\n';
    }
    return out.str();
}

} // namespace talbot::io
