#include "causal/classify.hpp"

#include <algorithm>

#include "image_analysis.hpp"

namespace causal {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::TimePreserving:
      return "time-preserving";
    case Verdict::NotTimePreserving:
      return "not-time-preserving";
    case Verdict::NotFundamentalForm:
      return "not-fundamental-form";
  }
  return "unknown";
}

Classification classify(const CircuitElement& circuit, Horizon horizon, ClassifyOptions options) {
  Classification result;
  result.stats.horizon = horizon.max_tick.index;
  result.stats.degenerate_horizon = horizon.max_tick.index == 0;
  if (!circuit.chi) {
    result.verdict = Verdict::NotFundamentalForm;
    return result;
  }

  const unsigned jobs = std::max(1U, options.jobs);
  const PrefixRelation prefix =
      build_prefix_relation(enumerate_causal_signals(circuit.control_alphabet, horizon));
  const auto analysis = detail::analyze(*circuit.chi, prefix, jobs);

  auto& stats = result.stats;
  stats.signals = prefix.signals.size();
  stats.relation_pairs = prefix.pairs.size();
  stats.images = analysis.relation.nodes.size();
  stats.derived_pairs = analysis.relation.pairs.size();
  stats.excluded_undefined = analysis.relation.excluded_undefined;
  stats.undefined_signals = static_cast<std::size_t>(
      std::count(analysis.node_of.begin(), analysis.node_of.end(), std::nullopt));

  AxiomReport axioms = check_partial_order(analysis.relation);
  if (axioms.partial_order()) {
    result.verdict = Verdict::TimePreserving;
  } else {
    result.verdict = Verdict::NotTimePreserving;
    if (!axioms.antisymmetric) {
      result.failure = "antisymmetry";
      result.witness = detail::smallest_witness(analysis, prefix);
    } else if (!axioms.transitive) {
      result.failure = "transitivity";
    } else {
      result.failure = "reflexivity";
    }
  }
  result.axioms = std::move(axioms);
  return result;
}

}  // namespace causal
