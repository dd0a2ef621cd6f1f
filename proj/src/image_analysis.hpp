#pragma once

// Shared machinery behind derive_relation, find_prop2_witness and classify:
// evaluate a restriction map over a carrier once, intern the images, and scan
// the prefix relation, remembering the smallest signal pair behind every
// derived pair.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "causal/restriction.hpp"

namespace causal::detail {

using IndexPair = std::pair<std::size_t, std::size_t>;

struct ImageAnalysis {
  DerivedRelation relation;
  /// node index per carrier signal, nullopt when undefined
  std::vector<std::optional<std::size_t>> node_of;
  /// derived pair -> smallest (x, y) carrier pair mapping onto it
  std::map<IndexPair, IndexPair> min_source;
};

ImageAnalysis analyze(const RestrictionMap& chi, const PrefixRelation& prefix, unsigned jobs);

std::optional<Prop2Witness> smallest_witness(const ImageAnalysis& analysis,
                                             const PrefixRelation& prefix);

}  // namespace causal::detail
