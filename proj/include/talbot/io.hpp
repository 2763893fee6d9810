// io.hpp - file formats: CSV tables and traces, JSON documents and the
// envelope CSV + JSON sidecar pair.
//
// All emitters are deterministic (fixed field order, %.17g floats) so a
// given input always produces byte-identical files.

#pragma once

#include <string>

#include "talbot/field.hpp"
#include "talbot/gauss_phase.hpp"
#include "talbot/tai.hpp"
#include "talbot/talbot_s.hpp"

namespace talbot::io {

// s-table: CSV with one row per q, one column per p, empty cells where
// gcd(p, q) != 1; JSON as a flat list of {p, q, s}.
std::string s_table_csv(const STable& table);
std::string s_table_json(const STable& table);

// Phase sequence: CSV rows (n, num, den, re, im); JSON with provenance
// {p, q, sigma, s, xi0: {num, den}, phases: [...], complex: [...]} and a
// "gain" field when the sequence carries one.
std::string phase_sequence_csv(const PhaseSequence& seq);
std::string phase_sequence_json(const PhaseSequence& seq, int indent = 2);

// Both members of the DFT pair in one document / one CSV stream.
std::string dft_pair_json(const PhaseSequence& x, const PhaseSequence& w);
std::string dft_pair_csv(const PhaseSequence& x, const PhaseSequence& w);

// TAI design: {p, q, sigma, s, bin_width_fraction: "1/q", levels: [...]}.
std::string tai_design_json(const TaiDesign& design);

// Envelope: CSV `k,t,re,im` plus sidecar {"T": ..., "N": ...}. The sidecar
// path is the CSV path with its extension replaced by .json.
std::string envelope_csv(const PeriodicEnvelope& env);
std::string envelope_sidecar_json(const PeriodicEnvelope& env);
void write_envelope(const PeriodicEnvelope& env, const std::string& csv_path);
PeriodicEnvelope read_envelope(const std::string& csv_path);

// Spectrum CSV `n,re,im`, lines in ascending harmonic order.
std::string spectrum_csv(const LineSpectrum& spec);

// Plot trace `t,|E|,arg E`.
std::string trace_csv(const PeriodicEnvelope& env);

std::string sidecar_path(const std::string& csv_path);
void write_file(const std::string& path, const std::string& content);

} // namespace talbot::io
