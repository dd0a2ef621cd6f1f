#pragma once

// Restriction maps and the relation they induce on their images.
//
// A restriction map sends a causal control signal to the set of
// channel-tagged input samples the circuit reads for the current output, or
// to nothing when the output is undefined. Pushing the prefix order through
// the map yields the derived relation; whether that relation is a partial
// order decides time preservation, and an antisymmetry failure is certified
// by four control signals s0 <= s1, u0 <= u1 with crossed images.

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "causal/time.hpp"

namespace causal {

struct ChannelId {
  std::string name;

  friend auto operator<=>(const ChannelId&, const ChannelId&) = default;
};

struct RefPoint {
  ChannelId channel;
  Tick tick;

  friend auto operator<=>(const RefPoint&, const RefPoint&) = default;
};

/// A finite set of reference points, kept sorted and duplicate-free.
class ChiImage {
 public:
  ChiImage() = default;
  explicit ChiImage(std::vector<RefPoint> refs);

  const std::vector<RefPoint>& refs() const { return refs_; }
  bool contains(const RefPoint& p) const;
  bool empty() const { return refs_.empty(); }
  std::size_t size() const { return refs_.size(); }
  /// Largest tick in the image; 0 for the empty image.
  Tick max_tick() const;

  friend auto operator<=>(const ChiImage&, const ChiImage&) = default;

 private:
  std::vector<RefPoint> refs_;
};

/// "{(D,0),(D,3)}"
std::string to_string(const ChiImage& image);

/// Undefined is std::nullopt.
using RestrictionMap = std::function<std::optional<ChiImage>(const CausalSignal&)>;

/// Image of a prefix relation under a restriction map. `nodes` is sorted and
/// `pairs` indexes into it, sorted and duplicate-free.
struct DerivedRelation {
  std::vector<ChiImage> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  /// Relation pairs dropped because either side was undefined.
  std::size_t excluded_undefined = 0;

  static DerivedRelation from_pairs(const std::vector<std::pair<ChiImage, ChiImage>>& pairs);

  bool contains(std::size_t from, std::size_t to) const;
  std::optional<std::size_t> node_index(const ChiImage& image) const;
};

struct AxiomReport {
  bool reflexive = true;
  std::optional<ChiImage> reflexivity_witness;
  bool antisymmetric = true;
  std::optional<std::pair<ChiImage, ChiImage>> antisymmetry_witness;
  bool transitive = true;
  std::optional<std::array<ChiImage, 3>> transitivity_witness;

  bool partial_order() const { return reflexive && antisymmetric && transitive; }
};

struct Prop2Witness {
  CausalSignal s0, s1, u0, u1;
  ChiImage x, y;

  /// Re-evaluates `chi` on the four signals and checks the prefix relations,
  /// the crossed images and x != y.
  bool validate(const RestrictionMap& chi) const;
};

DerivedRelation derive_relation(const RestrictionMap& chi, const PrefixRelation& relation,
                                unsigned jobs = 1);

/// Reflexivity over the nodes, antisymmetry and transitivity over the pairs.
/// Failing witnesses are the lexicographically smallest by node order.
AxiomReport check_partial_order(const DerivedRelation& rel);

/// The lexicographically smallest (s0, s1, u0, u1) certifying an
/// antisymmetry failure, or nullopt. Independent of `jobs`.
std::optional<Prop2Witness> find_prop2_witness(const RestrictionMap& chi,
                                               const PrefixRelation& relation,
                                               unsigned jobs = 1);

}  // namespace causal
