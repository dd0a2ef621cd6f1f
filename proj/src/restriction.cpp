#include "causal/restriction.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "image_analysis.hpp"
#include "parallel.hpp"

namespace causal {

ChiImage::ChiImage(std::vector<RefPoint> refs) : refs_(std::move(refs)) {
  std::sort(refs_.begin(), refs_.end());
  refs_.erase(std::unique(refs_.begin(), refs_.end()), refs_.end());
}

bool ChiImage::contains(const RefPoint& p) const {
  return std::binary_search(refs_.begin(), refs_.end(), p);
}

Tick ChiImage::max_tick() const {
  Tick best{0};
  for (const auto& r : refs_) {
    best = std::max(best, r.tick);
  }
  return best;
}

std::string to_string(const ChiImage& image) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& r : image.refs()) {
    os << (first ? "" : ",") << '(' << r.channel.name << ',' << r.tick.index << ')';
    first = false;
  }
  os << '}';
  return os.str();
}

DerivedRelation DerivedRelation::from_pairs(
    const std::vector<std::pair<ChiImage, ChiImage>>& pairs) {
  DerivedRelation rel;
  std::set<ChiImage> nodes;
  for (const auto& [a, b] : pairs) {
    nodes.insert(a);
    nodes.insert(b);
  }
  rel.nodes.assign(nodes.begin(), nodes.end());
  for (const auto& [a, b] : pairs) {
    rel.pairs.emplace_back(*rel.node_index(a), *rel.node_index(b));
  }
  std::sort(rel.pairs.begin(), rel.pairs.end());
  rel.pairs.erase(std::unique(rel.pairs.begin(), rel.pairs.end()), rel.pairs.end());
  return rel;
}

bool DerivedRelation::contains(std::size_t from, std::size_t to) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::pair{from, to});
}

std::optional<std::size_t> DerivedRelation::node_index(const ChiImage& image) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), image);
  if (it == nodes.end() || *it != image) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - nodes.begin());
}

bool Prop2Witness::validate(const RestrictionMap& chi) const {
  if (!prefix_leq(s0, s1) || !prefix_leq(u0, u1) || x == y) {
    return false;
  }
  auto is = [&](const CausalSignal& s, const ChiImage& want) {
    auto got = chi(s);
    return got.has_value() && *got == want;
  };
  return is(s0, x) && is(u1, x) && is(s1, y) && is(u0, y);
}

AxiomReport check_partial_order(const DerivedRelation& rel) {
  AxiomReport report;
  for (std::size_t n = 0; n < rel.nodes.size(); ++n) {
    if (!rel.contains(n, n)) {
      report.reflexive = false;
      report.reflexivity_witness = rel.nodes[n];
      break;
    }
  }
  for (const auto& [a, b] : rel.pairs) {
    if (a != b && rel.contains(b, a)) {
      report.antisymmetric = false;
      report.antisymmetry_witness = std::pair{rel.nodes[a], rel.nodes[b]};
      break;
    }
  }
  // Pairs are sorted, so the successors of y form a contiguous run and the
  // first failure found is the smallest (x, y, z).
  for (const auto& [a, b] : rel.pairs) {
    auto it = std::lower_bound(rel.pairs.begin(), rel.pairs.end(), std::pair{b, std::size_t{0}});
    for (; it != rel.pairs.end() && it->first == b; ++it) {
      if (!rel.contains(a, it->second)) {
        report.transitive = false;
        report.transitivity_witness =
            std::array{rel.nodes[a], rel.nodes[b], rel.nodes[it->second]};
        break;
      }
    }
    if (!report.transitive) {
      break;
    }
  }
  return report;
}

namespace detail {

namespace {

bool pair_less(const PrefixRelation& prefix, const IndexPair& a, const IndexPair& b) {
  const auto& s = prefix.signals;
  if (auto c = s[a.first] <=> s[b.first]; c != 0) {
    return c < 0;
  }
  return s[a.second] < s[b.second];
}

}  // namespace

ImageAnalysis analyze(const RestrictionMap& chi, const PrefixRelation& prefix, unsigned jobs) {
  const auto& signals = prefix.signals;
  std::vector<std::optional<ChiImage>> images(signals.size());
  for_each_chunk(signals.size(), jobs, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      images[i] = chi(signals[i]);
    }
  });

  ImageAnalysis out;
  std::map<ChiImage, std::size_t> ids;
  for (const auto& img : images) {
    if (img) {
      ids.emplace(*img, 0);
    }
  }
  for (auto& [img, id] : ids) {
    id = out.relation.nodes.size();
    out.relation.nodes.push_back(img);
  }
  out.node_of.reserve(signals.size());
  for (const auto& img : images) {
    out.node_of.push_back(img ? std::optional{ids.at(*img)} : std::nullopt);
  }

  struct Partial {
    std::map<IndexPair, IndexPair> min_source;
    std::size_t excluded = 0;
  };
  std::vector<Partial> partials(std::max(1U, jobs));
  const auto& pairs = prefix.pairs;
  for_each_chunk(pairs.size(), jobs, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    Partial& part = partials[chunk];
    for (std::size_t i = begin; i < end; ++i) {
      const auto& [x, y] = pairs[i];
      const auto& nx = out.node_of[x];
      const auto& ny = out.node_of[y];
      if (!nx || !ny) {
        ++part.excluded;
        continue;
      }
      auto [it, fresh] = part.min_source.try_emplace(IndexPair{*nx, *ny}, pairs[i]);
      if (!fresh && pair_less(prefix, pairs[i], it->second)) {
        it->second = pairs[i];
      }
    }
  });

  for (auto& part : partials) {
    out.relation.excluded_undefined += part.excluded;
    for (const auto& [key, src] : part.min_source) {
      auto [it, fresh] = out.min_source.try_emplace(key, src);
      if (!fresh && pair_less(prefix, src, it->second)) {
        it->second = src;
      }
    }
  }
  out.relation.pairs.reserve(out.min_source.size());
  for (const auto& [key, src] : out.min_source) {
    out.relation.pairs.push_back(key);
  }
  return out;
}

std::optional<Prop2Witness> smallest_witness(const ImageAnalysis& analysis,
                                             const PrefixRelation& prefix) {
  std::optional<std::pair<IndexPair, IndexPair>> best;
  for (const auto& [key, forward] : analysis.min_source) {
    if (key.first == key.second) {
      continue;
    }
    auto back = analysis.min_source.find(IndexPair{key.second, key.first});
    if (back == analysis.min_source.end()) {
      continue;
    }
    // Distinct derived pairs have distinct (s0, s1), so comparing the
    // forward halves orders the quadruples.
    if (!best || pair_less(prefix, forward, best->first)) {
      best = std::pair{forward, back->second};
    }
  }
  if (!best) {
    return std::nullopt;
  }
  const auto& s = prefix.signals;
  const auto& [fwd, bwd] = *best;
  return Prop2Witness{s[fwd.first],
                      s[fwd.second],
                      s[bwd.first],
                      s[bwd.second],
                      analysis.relation.nodes[*analysis.node_of[fwd.first]],
                      analysis.relation.nodes[*analysis.node_of[fwd.second]]};
}

}  // namespace detail

DerivedRelation derive_relation(const RestrictionMap& chi, const PrefixRelation& relation,
                                unsigned jobs) {
  return detail::analyze(chi, relation, jobs).relation;
}

std::optional<Prop2Witness> find_prop2_witness(const RestrictionMap& chi,
                                               const PrefixRelation& relation, unsigned jobs) {
  auto analysis = detail::analyze(chi, relation, jobs);
  return detail::smallest_witness(analysis, relation);
}

}  // namespace causal
