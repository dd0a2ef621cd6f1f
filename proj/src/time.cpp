#include "causal/time.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace causal {

Alphabet::Alphabet(std::vector<std::string> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw UsageError("alphabet must be non-empty");
  }
  if (values_.size() > std::numeric_limits<Symbol>::max()) {
    throw UsageError("alphabet too large");
  }
  std::set<std::string_view> seen;
  for (const auto& v : values_) {
    if (!seen.insert(v).second) {
      throw UsageError("duplicate alphabet value '" + v + "'");
    }
  }
}

Alphabet::Alphabet(std::initializer_list<std::string_view> values)
    : Alphabet(std::vector<std::string>(values.begin(), values.end())) {}

Alphabet Alphabet::binary() { return Alphabet{"0", "1"}; }

Alphabet Alphabet::bit_strings(std::size_t width) {
  if (width == 0) {
    return Alphabet{"-"};
  }
  if (width > 15) {
    throw UsageError("bit-string alphabet wider than 15 bits");
  }
  std::vector<std::string> values;
  for (std::size_t v = 0; v < (std::size_t{1} << width); ++v) {
    std::string s(width, '0');
    for (std::size_t b = 0; b < width; ++b) {
      if ((v >> (width - 1 - b)) & 1U) {
        s[b] = '1';
      }
    }
    values.push_back(std::move(s));
  }
  return Alphabet(std::move(values));
}

Alphabet Alphabet::product(const Alphabet& first, const Alphabet& second) {
  std::vector<std::string> values;
  values.reserve(first.size() * second.size());
  for (const auto& a : first.values()) {
    for (const auto& b : second.values()) {
      values.push_back(a + "/" + b);
    }
  }
  return Alphabet(std::move(values));
}

const std::string& Alphabet::name(Symbol s) const {
  if (s >= values_.size()) {
    throw UsageError("symbol index out of alphabet");
  }
  return values_[s];
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  auto it = std::find(values_.begin(), values_.end(), name);
  if (it == values_.end()) {
    return std::nullopt;
  }
  return static_cast<Symbol>(it - values_.begin());
}

Symbol Alphabet::symbol(std::string_view name) const {
  if (auto s = find(name)) {
    return *s;
  }
  std::string msg = "value '" + std::string(name) + "' not in alphabet {";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    msg += (i ? "," : "") + values_[i];
  }
  throw UsageError(msg + "}");
}

AlphabetRef make_alphabet(Alphabet alphabet) {
  return std::make_shared<const Alphabet>(std::move(alphabet));
}

bool same_alphabet(const AlphabetRef& a, const AlphabetRef& b) {
  return a == b || (a && b && *a == *b);
}

Trace::Trace(AlphabetRef alphabet, std::vector<Symbol> samples)
    : alphabet_(std::move(alphabet)), samples_(std::move(samples)) {
  if (!alphabet_) {
    throw UsageError("trace without alphabet");
  }
  for (Symbol s : samples_) {
    if (s >= alphabet_->size()) {
      throw UsageError("trace sample outside its alphabet");
    }
  }
}

Trace Trace::from_names(AlphabetRef alphabet, std::span<const std::string> names) {
  if (!alphabet) {
    throw UsageError("trace without alphabet");
  }
  std::vector<Symbol> samples;
  samples.reserve(names.size());
  for (const auto& n : names) {
    samples.push_back(alphabet->symbol(n));
  }
  return Trace(std::move(alphabet), std::move(samples));
}

Symbol Trace::at(Tick tick) const {
  if (tick.index >= samples_.size()) {
    throw RangeError("tick " + std::to_string(tick.index) + " beyond trace of length " +
                     std::to_string(samples_.size()));
  }
  return samples_[tick.index];
}

std::vector<std::string> Trace::names() const {
  std::vector<std::string> out;
  out.reserve(samples_.size());
  for (Symbol s : samples_) {
    out.push_back(alphabet_->name(s));
  }
  return out;
}

bool operator==(const Trace& a, const Trace& b) {
  return a.samples_ == b.samples_ && same_alphabet(a.alphabet_, b.alphabet_);
}

CausalSignal::CausalSignal(Tick t, Trace trace) : t_(t), trace_(std::move(trace)) {
  if (trace_.size() != t_.index + 1) {
    throw UsageError("causal signal at t=" + std::to_string(t_.index) + " needs " +
                     std::to_string(t_.index + 1) + " samples, got " +
                     std::to_string(trace_.size()));
  }
}

CausalSignal CausalSignal::whole(Trace trace) {
  if (trace.size() == 0) {
    throw UsageError("causal signal needs at least one sample");
  }
  Tick t{trace.size() - 1};
  return CausalSignal(t, std::move(trace));
}

CausalSignal CausalSignal::prefix(Tick u) const {
  if (u > t_) {
    throw RangeError("prefix tick beyond signal time");
  }
  return CausalSignal(u, restrict_trace(trace_, u));
}

bool operator==(const CausalSignal& a, const CausalSignal& b) {
  return a.t_ == b.t_ && a.trace_ == b.trace_;
}

std::strong_ordering operator<=>(const CausalSignal& a, const CausalSignal& b) {
  if (auto c = a.t_ <=> b.t_; c != 0) {
    return c;
  }
  const auto& x = a.trace_.samples();
  const auto& y = b.trace_.samples();
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

std::string to_string(const CausalSignal& s) {
  std::ostringstream os;
  os << "(t=" << s.t().index << ",[";
  const auto& alpha = *s.trace().alphabet();
  for (std::size_t i = 0; i < s.trace().size(); ++i) {
    os << (i ? "," : "") << alpha.name(s[i]);
  }
  os << "])";
  return os.str();
}

bool prefix_leq(const CausalSignal& a, const CausalSignal& b) {
  if (!same_alphabet(a.trace().alphabet(), b.trace().alphabet())) {
    throw UsageError("prefix_leq: signals over different alphabets");
  }
  if (a.t() > b.t()) {
    return false;
  }
  auto x = a.samples();
  auto y = b.samples();
  return std::equal(x.begin(), x.end(), y.begin());
}

Trace restrict_trace(const Trace& trace, Tick t) {
  if (t.index >= trace.size()) {
    throw RangeError("restrict_trace: tick " + std::to_string(t.index) +
                     " beyond trace of length " + std::to_string(trace.size()));
  }
  const auto& s = trace.samples();
  return Trace(trace.alphabet(), std::vector<Symbol>(s.begin(), s.begin() + t.index + 1));
}

std::size_t causal_signal_count(std::size_t alphabet_size, Horizon horizon) {
  std::size_t total = 0;
  std::size_t layer = 1;
  for (std::size_t t = 0; t <= horizon.max_tick.index; ++t) {
    layer *= alphabet_size;
    total += layer;
  }
  return total;
}

std::vector<CausalSignal> enumerate_causal_signals(const AlphabetRef& alphabet, Horizon horizon) {
  if (!alphabet || alphabet->size() == 0) {
    throw UsageError("enumerate_causal_signals: empty alphabet");
  }
  const std::size_t k = alphabet->size();
  std::vector<CausalSignal> out;
  out.reserve(causal_signal_count(k, horizon));
  std::size_t layer = 1;
  for (std::size_t t = 0; t <= horizon.max_tick.index; ++t) {
    layer *= k;
    // Base-k counter, tick 0 most significant, so the order is lexicographic.
    for (std::size_t n = 0; n < layer; ++n) {
      std::vector<Symbol> samples(t + 1);
      std::size_t rest = n;
      for (std::size_t pos = t + 1; pos-- > 0;) {
        samples[pos] = static_cast<Symbol>(rest % k);
        rest /= k;
      }
      out.emplace_back(Tick{t}, Trace(alphabet, std::move(samples)));
    }
  }
  return out;
}

PrefixRelation build_prefix_relation(std::vector<CausalSignal> signals) {
  PrefixRelation rel;
  rel.signals = std::move(signals);
  std::map<std::vector<Symbol>, std::size_t> index;
  for (std::size_t i = 0; i < rel.signals.size(); ++i) {
    index.emplace(rel.signals[i].trace().samples(), i);
  }
  for (std::size_t j = 0; j < rel.signals.size(); ++j) {
    const auto& b = rel.signals[j];
    std::vector<Symbol> key;
    key.reserve(b.t().index + 1);
    for (std::size_t u = 0; u <= b.t().index; ++u) {
      key.push_back(b[u]);
      auto it = index.find(key);
      if (it != index.end() && same_alphabet(rel.signals[it->second].trace().alphabet(),
                                             b.trace().alphabet())) {
        rel.pairs.emplace_back(it->second, j);
      }
    }
  }
  std::sort(rel.pairs.begin(), rel.pairs.end());
  return rel;
}

}  // namespace causal
