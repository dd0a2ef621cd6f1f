#pragma once

// Discrete time, value traces and causal signals.
//
// A causal signal is a pair (t, trace) where the trace holds exactly the
// samples at ticks 0..t. Causal signals carry the prefix order: (t, a) <= (u, b)
// iff t <= u and a agrees with b on every tick up to t.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace causal {

/// Raised when an operation is called outside its contract (mismatched
/// alphabets, unknown symbols, inconsistent lengths).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a tick lies outside the domain of a trace.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct Tick {
  std::size_t index = 0;

  friend constexpr auto operator<=>(Tick, Tick) = default;
};

struct Horizon {
  Tick max_tick;

  friend constexpr bool operator==(Horizon, Horizon) = default;
};

/// Index of a value within its alphabet, in declaration order.
using Symbol = std::uint16_t;

/// A finite, non-empty set of distinct symbolic values. Declaration order
/// defines symbol indices and therefore the lexicographic order on traces.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> values);
  Alphabet(std::initializer_list<std::string_view> values);

  /// {"0", "1"}
  static Alphabet binary();
  /// All bit strings of the given width, in increasing binary order
  /// ("00", "01", "10", "11"). Width zero gives the single value "-".
  static Alphabet bit_strings(std::size_t width);
  /// Pairs "x/y" with index = i * |second| + j.
  static Alphabet product(const Alphabet& first, const Alphabet& second);

  std::size_t size() const { return values_.size(); }
  const std::string& name(Symbol s) const;
  std::optional<Symbol> find(std::string_view name) const;
  /// Like find(), but throws UsageError for unknown names.
  Symbol symbol(std::string_view name) const;
  const std::vector<std::string>& values() const { return values_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> values_;
};

using AlphabetRef = std::shared_ptr<const Alphabet>;

AlphabetRef make_alphabet(Alphabet alphabet);

bool same_alphabet(const AlphabetRef& a, const AlphabetRef& b);

class Trace {
 public:
  Trace(AlphabetRef alphabet, std::vector<Symbol> samples);
  /// Builds a trace from value names, e.g. {"0", "1", "1"}.
  static Trace from_names(AlphabetRef alphabet, std::span<const std::string> names);

  const AlphabetRef& alphabet() const { return alphabet_; }
  const std::vector<Symbol>& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  Symbol operator[](std::size_t tick) const { return samples_[tick]; }
  Symbol at(Tick tick) const;

  std::vector<std::string> names() const;

  friend bool operator==(const Trace& a, const Trace& b);

 private:
  AlphabetRef alphabet_;
  std::vector<Symbol> samples_;
};

class CausalSignal {
 public:
  /// The trace must hold exactly t + 1 samples.
  CausalSignal(Tick t, Trace trace);
  /// The signal at the last tick of a non-empty trace.
  static CausalSignal whole(Trace trace);

  Tick t() const { return t_; }
  const Trace& trace() const { return trace_; }
  Symbol current() const { return trace_[t_.index]; }
  Symbol operator[](std::size_t tick) const { return trace_[tick]; }
  std::span<const Symbol> samples() const { return trace_.samples(); }

  /// The prefix of this signal ending at `u`; throws RangeError past t.
  CausalSignal prefix(Tick u) const;

  friend bool operator==(const CausalSignal& a, const CausalSignal& b);
  /// Lexicographic on (t, samples in declaration order). Ignores alphabets.
  friend std::strong_ordering operator<=>(const CausalSignal& a, const CausalSignal& b);

 private:
  Tick t_;
  Trace trace_;
};

std::string to_string(const CausalSignal& s);

bool prefix_leq(const CausalSignal& a, const CausalSignal& b);

/// The first t.index + 1 samples of `trace`.
Trace restrict_trace(const Trace& trace, Tick t);

/// Every causal signal with 0 <= t <= horizon over `alphabet`, ordered by
/// (t, samples). Count is sum_{t=0..n} |alphabet|^(t+1).
std::vector<CausalSignal> enumerate_causal_signals(const AlphabetRef& alphabet, Horizon horizon);

std::size_t causal_signal_count(std::size_t alphabet_size, Horizon horizon);

/// The prefix order over a carrier of causal signals. Pairs hold indices
/// into `signals`, sorted.
struct PrefixRelation {
  std::vector<CausalSignal> signals;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

/// All pairs (a, b) of the carrier with prefix_leq(a, b). Prefixes missing
/// from the carrier are skipped.
PrefixRelation build_prefix_relation(std::vector<CausalSignal> signals);

}  // namespace causal
