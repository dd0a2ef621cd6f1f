#pragma once

// Machine-readable reports and the CSV formats used by the command line.
//
// JSON reports are deterministic: object keys are sorted, images and
// witnesses are serialized in their canonical order, and wall-clock timing
// is only included on request.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "causal/circuit.hpp"
#include "causal/classify.hpp"

namespace causal::report {

using nlohmann::json;

json to_json(const CausalSignal& signal);
json to_json(const ChiImage& image);
json to_json(const AxiomReport& axioms);
json to_json(const Prop2Witness& witness);
json to_json(const ClassificationStats& stats);

/// Top-level keys: circuit, command, verdict, axioms, witness, stats, timing.
json classify_report(const CircuitElement& circuit, const Classification& result,
                     std::optional<double> wall_seconds = std::nullopt);

std::string classify_text(const CircuitElement& circuit, const Classification& result);

json check_report(const CircuitElement& circuit, Horizon horizon, std::size_t trials,
                  std::uint64_t seed, const std::optional<PropertyReport>& chi_soundness,
                  const PropertyReport& causality,
                  std::optional<double> wall_seconds = std::nullopt);

/// Columns of a stimulus CSV ("tick,<col>..."), one row per tick with ticks
/// contiguous from 0. Throws UsageError on gaps, duplicates or ragged rows.
struct Stimulus {
  std::vector<std::string> columns;                       // excluding tick
  std::map<std::string, std::vector<std::string>> values;  // column -> per-tick values
  std::size_t length = 0;
};

Stimulus parse_stimulus(std::string_view csv);

/// Distinct values of the named columns, in first-appearance order, after
/// the values already in `seed`.
std::vector<std::string> collect_values(const Stimulus& stimulus,
                                        const std::vector<std::string>& columns,
                                        std::vector<std::string> seed);

/// Control trace plus one trace per input channel. The control column is
/// named "control" and may be omitted when the control alphabet has a
/// single value; input columns are named by channel.
struct BoundStimulus {
  Trace control;
  std::vector<Trace> inputs;
};

BoundStimulus bind_stimulus(const Stimulus& stimulus, const CircuitElement& circuit);

/// "tick,output" followed by one row per tick; undefined values print UNDEF.
std::string trace_csv(const std::vector<OutputSample>& outputs, const Alphabet& output_alphabet);

/// Comma-separated symbol names, e.g. "0,1,0,1" or "A/-,B/A,-/B".
Trace parse_control_list(std::string_view text, const AlphabetRef& alphabet);

}  // namespace causal::report
