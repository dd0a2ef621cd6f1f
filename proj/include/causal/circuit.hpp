#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "causal/restriction.hpp"
#include "causal/time.hpp"

namespace causal {

struct InputChannel {
  ChannelId id;
  AlphabetRef alphabet;
};

/// Output at the control signal's current tick. `inputs` holds one causal
/// signal per input channel, in declaration order, aligned with `control`.
/// Undefined is std::nullopt.
using Evaluation =
    std::function<std::optional<Symbol>(const CausalSignal& control,
                                        std::span<const CausalSignal> inputs)>;

/// A circuit viewed as a causal function of a control signal and data
/// inputs. `chi` is present when the circuit has a fundamental form.
struct CircuitElement {
  std::string name;
  AlphabetRef control_alphabet;
  std::vector<InputChannel> inputs;
  AlphabetRef output_alphabet;
  Evaluation eval;
  std::optional<RestrictionMap> chi;

  bool has_chi() const { return chi.has_value(); }
  /// Position of `id` among the inputs; throws UsageError when unknown.
  std::size_t channel_index(const ChannelId& id) const;
};

struct OutputSample {
  Tick tick;
  std::optional<Symbol> value;

  friend bool operator==(const OutputSample&, const OutputSample&) = default;
};

/// Runs the circuit at every tick of the given traces, feeding each tick the
/// prefixes up to that tick. All traces must share one length.
std::vector<OutputSample> output_stream(const CircuitElement& circuit, const Trace& control,
                                        std::span<const Trace> inputs);

struct PropertyReport {
  std::size_t trials = 0;
  std::size_t mutations = 0;
  std::size_t violations = 0;
  /// Trials whose original output was undefined (still compared).
  std::size_t undefined_trials = 0;

  bool ok() const { return violations == 0; }
};

/// Random control/input traces up to the horizon; resamples input samples at
/// (channel, tick) positions outside the restriction-map image and checks the
/// output is unchanged. Throws UsageError when the circuit has no chi.
PropertyReport chi_soundness_check(const CircuitElement& circuit, Horizon horizon,
                                   std::size_t trials, std::uint64_t seed);

/// Random traces of length horizon + 1; resamples every sample after a random
/// tick t and checks outputs at ticks <= t are unchanged.
PropertyReport causality_check(const CircuitElement& circuit, Horizon horizon,
                               std::size_t trials, std::uint64_t seed);

}  // namespace causal
