#include "causal/circuit.hpp"

#include <algorithm>
#include <random>

namespace causal {

std::size_t CircuitElement::channel_index(const ChannelId& id) const {
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i].id == id) {
      return i;
    }
  }
  throw UsageError("circuit '" + name + "' has no input channel '" + id.name + "'");
}

std::vector<OutputSample> output_stream(const CircuitElement& circuit, const Trace& control,
                                        std::span<const Trace> inputs) {
  if (inputs.size() != circuit.inputs.size()) {
    throw UsageError("output_stream: expected " + std::to_string(circuit.inputs.size()) +
                     " input traces, got " + std::to_string(inputs.size()));
  }
  if (!same_alphabet(control.alphabet(), circuit.control_alphabet)) {
    throw UsageError("output_stream: control trace over the wrong alphabet");
  }
  for (std::size_t c = 0; c < inputs.size(); ++c) {
    if (inputs[c].size() != control.size()) {
      throw UsageError("output_stream: trace length mismatch on channel " +
                       circuit.inputs[c].id.name);
    }
    if (!same_alphabet(inputs[c].alphabet(), circuit.inputs[c].alphabet)) {
      throw UsageError("output_stream: channel " + circuit.inputs[c].id.name +
                       " trace over the wrong alphabet");
    }
  }
  std::vector<OutputSample> out;
  out.reserve(control.size());
  std::vector<CausalSignal> prefixes;
  for (std::size_t t = 0; t < control.size(); ++t) {
    const Tick tick{t};
    prefixes.clear();
    for (const auto& in : inputs) {
      prefixes.emplace_back(tick, restrict_trace(in, tick));
    }
    CausalSignal ctl(tick, restrict_trace(control, tick));
    out.push_back({tick, circuit.eval(ctl, prefixes)});
  }
  return out;
}

namespace {

Trace random_trace(const AlphabetRef& alphabet, std::size_t length, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, alphabet->size() - 1);
  std::vector<Symbol> samples(length);
  for (auto& s : samples) {
    s = static_cast<Symbol>(pick(rng));
  }
  return Trace(alphabet, std::move(samples));
}

// Replaces the sample with a different value when the alphabet allows it.
bool resample(std::vector<Symbol>& samples, std::size_t tick, std::size_t alphabet_size,
              std::mt19937_64& rng) {
  if (alphabet_size < 2) {
    return false;
  }
  std::uniform_int_distribution<std::size_t> shift(1, alphabet_size - 1);
  samples[tick] = static_cast<Symbol>((samples[tick] + shift(rng)) % alphabet_size);
  return true;
}

}  // namespace

PropertyReport chi_soundness_check(const CircuitElement& circuit, Horizon horizon,
                                   std::size_t trials, std::uint64_t seed) {
  if (!circuit.chi) {
    throw UsageError("chi_soundness_check: circuit '" + circuit.name +
                     "' has no restriction map");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_t(0, horizon.max_tick.index);
  std::bernoulli_distribution coin(0.5);
  PropertyReport report;

  for (std::size_t trial = 0; trial < trials; ++trial) {
    const Tick t{pick_t(rng)};
    CausalSignal control(t, random_trace(circuit.control_alphabet, t.index + 1, rng));
    std::vector<CausalSignal> inputs;
    for (const auto& ch : circuit.inputs) {
      inputs.emplace_back(t, random_trace(ch.alphabet, t.index + 1, rng));
    }
    const auto image = (*circuit.chi)(control);
    const auto before = circuit.eval(control, inputs);
    if (!before) {
      ++report.undefined_trials;
    }

    std::vector<CausalSignal> mutated;
    for (std::size_t c = 0; c < inputs.size(); ++c) {
      auto samples = inputs[c].trace().samples();
      for (std::size_t u = 0; u <= t.index; ++u) {
        if (image && image->contains(RefPoint{circuit.inputs[c].id, Tick{u}})) {
          continue;
        }
        if (coin(rng) && resample(samples, u, circuit.inputs[c].alphabet->size(), rng)) {
          ++report.mutations;
        }
      }
      mutated.emplace_back(t, Trace(circuit.inputs[c].alphabet, std::move(samples)));
    }
    if (circuit.eval(control, mutated) != before) {
      ++report.violations;
    }
    ++report.trials;
  }
  return report;
}

PropertyReport causality_check(const CircuitElement& circuit, Horizon horizon,
                               std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t length = horizon.max_tick.index + 1;
  std::uniform_int_distribution<std::size_t> pick_t(0, length - 1);
  PropertyReport report;

  for (std::size_t trial = 0; trial < trials; ++trial) {
    Trace control = random_trace(circuit.control_alphabet, length, rng);
    std::vector<Trace> inputs;
    for (const auto& ch : circuit.inputs) {
      inputs.push_back(random_trace(ch.alphabet, length, rng));
    }
    const std::size_t cut = pick_t(rng);
    const auto before = output_stream(circuit, control, inputs);
    if (std::any_of(before.begin(), before.begin() + cut + 1,
                    [](const OutputSample& s) { return !s.value; })) {
      ++report.undefined_trials;
    }

    auto future = [&](const Trace& tr) {
      auto samples = tr.samples();
      for (std::size_t u = cut + 1; u < length; ++u) {
        if (resample(samples, u, tr.alphabet()->size(), rng)) {
          ++report.mutations;
        }
      }
      return Trace(tr.alphabet(), std::move(samples));
    };
    Trace control2 = future(control);
    std::vector<Trace> inputs2;
    for (const auto& in : inputs) {
      inputs2.push_back(future(in));
    }
    const auto after = output_stream(circuit, control2, inputs2);
    if (!std::equal(before.begin(), before.begin() + cut + 1, after.begin())) {
      ++report.violations;
    }
    ++report.trials;
  }
  return report;
}

}  // namespace causal
