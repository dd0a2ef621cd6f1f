#pragma once

// Time-preservation classification.
//
// The classifier enumerates control signals up to a horizon, pushes their
// prefix order through the circuit's restriction map and checks the derived
// relation. A partial order means time-preserving; an antisymmetry failure
// means not time-preserving, certified by a witness. Circuits without a
// restriction map are reported as not being in fundamental form.

#include <optional>
#include <string>

#include "causal/circuit.hpp"
#include "causal/restriction.hpp"

namespace causal {

enum class Verdict { TimePreserving, NotTimePreserving, NotFundamentalForm };

/// "time-preserving", "not-time-preserving", "not-fundamental-form"
std::string to_string(Verdict v);

struct ClassificationStats {
  std::size_t horizon = 0;
  std::size_t signals = 0;
  std::size_t relation_pairs = 0;
  std::size_t images = 0;
  std::size_t derived_pairs = 0;
  std::size_t undefined_signals = 0;
  std::size_t excluded_undefined = 0;
  /// Horizon 0: no positive edge is expressible.
  bool degenerate_horizon = false;
};

struct Classification {
  Verdict verdict = Verdict::NotFundamentalForm;
  /// Present exactly when antisymmetry failed.
  std::optional<Prop2Witness> witness;
  std::optional<AxiomReport> axioms;
  /// First failing axiom ("antisymmetry", "transitivity", "reflexivity"),
  /// empty for time-preserving and not-fundamental-form verdicts.
  std::string failure;
  ClassificationStats stats;
};

struct ClassifyOptions {
  unsigned jobs = 1;
};

Classification classify(const CircuitElement& circuit, Horizon horizon,
                        ClassifyOptions options = {});

}  // namespace causal
