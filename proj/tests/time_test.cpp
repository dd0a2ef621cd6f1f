#include <gtest/gtest.h>

#include <random>
#include <set>

#include "causal/time.hpp"

using namespace causal;

namespace {

AlphabetRef bits() {
  static const AlphabetRef a = make_alphabet(Alphabet::binary());
  return a;
}

CausalSignal sig(std::size_t t, std::vector<Symbol> samples, AlphabetRef alpha = bits()) {
  return CausalSignal(Tick{t}, Trace(std::move(alpha), std::move(samples)));
}

// Independent count: one trace per tuple over every length 1..n+1.
std::size_t brute_count(std::size_t k, std::size_t horizon) {
  std::size_t total = 0;
  for (std::size_t len = 1; len <= horizon + 1; ++len) {
    std::size_t layer = 1;
    for (std::size_t i = 0; i < len; ++i) layer *= k;
    total += layer;
  }
  return total;
}

}  // namespace

TEST(Alphabet, RejectsEmptyAndDuplicates) {
  EXPECT_THROW(Alphabet(std::vector<std::string>{}), UsageError);
  EXPECT_THROW((Alphabet{"x", "x"}), UsageError);
  EXPECT_EQ(Alphabet::product(Alphabet{"A", "B"}, Alphabet{"0", "1"}).values(),
            (std::vector<std::string>{"A/0", "A/1", "B/0", "B/1"}));
  EXPECT_EQ(Alphabet::bit_strings(2).values(), (std::vector<std::string>{"00", "01", "10", "11"}));
}

TEST(PrefixLeq, Examples) {
  EXPECT_TRUE(prefix_leq(sig(1, {0, 1}), sig(2, {0, 1, 1})));
  EXPECT_FALSE(prefix_leq(sig(1, {0, 1}), sig(2, {0, 0, 1})));
  EXPECT_TRUE(prefix_leq(sig(1, {0, 1}), sig(1, {0, 1})));
  EXPECT_FALSE(prefix_leq(sig(2, {0, 1, 1}), sig(1, {0, 1})));
}

TEST(PrefixLeq, AlphabetMismatchIsUsageError) {
  auto other = make_alphabet(Alphabet{"x", "y"});
  EXPECT_THROW(prefix_leq(sig(0, {0}), sig(0, {0}, other)), UsageError);
}

TEST(CausalSignal, LengthMustMatchTick) {
  EXPECT_THROW(sig(2, {0, 1}), UsageError);
  EXPECT_NO_THROW(sig(0, {1}));
}

TEST(RestrictTrace, Examples) {
  Trace tr(bits(), {0, 1, 1, 0});
  EXPECT_EQ(restrict_trace(tr, Tick{1}).samples(), (std::vector<Symbol>{0, 1}));
  auto unary = make_alphabet(Alphabet{"a"});
  EXPECT_EQ(restrict_trace(Trace(unary, {0}), Tick{0}).samples(), (std::vector<Symbol>{0}));
  EXPECT_THROW(restrict_trace(Trace(bits(), {0, 1}), Tick{5}), RangeError);
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_causal_signals(bits(), Horizon{Tick{1}}).size(), 6U);
  EXPECT_EQ(enumerate_causal_signals(make_alphabet(Alphabet{"x"}), Horizon{Tick{2}}).size(), 3U);
  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<std::string> values;
    for (std::size_t i = 0; i < k; ++i) values.push_back("v" + std::to_string(i));
    auto alpha = make_alphabet(Alphabet(values));
    for (std::size_t h = 0; h <= 4; ++h) {
      EXPECT_EQ(enumerate_causal_signals(alpha, Horizon{Tick{h}}).size(), brute_count(k, h));
      EXPECT_EQ(causal_signal_count(k, Horizon{Tick{h}}), brute_count(k, h));
    }
  }
}

TEST(Enumerate, SortedDistinctAndComplete) {
  auto all = enumerate_causal_signals(bits(), Horizon{Tick{4}});
  ASSERT_EQ(all.size(), 62U);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
  for (const auto& s : all) {
    EXPECT_EQ(s.trace().size(), s.t().index + 1);
  }
}

TEST(Enumerate, EmptyAlphabetIsUsageError) {
  EXPECT_THROW(enumerate_causal_signals(nullptr, Horizon{Tick{1}}), UsageError);
}

TEST(PrefixRelation, BinaryHorizonOneHasTenPairs) {
  auto rel = build_prefix_relation(enumerate_causal_signals(bits(), Horizon{Tick{1}}));
  EXPECT_EQ(rel.pairs.size(), 10U);
  std::size_t reflexive = 0;
  for (auto [a, b] : rel.pairs) reflexive += a == b;
  EXPECT_EQ(reflexive, 6U);
}

TEST(PrefixRelation, SingleSignal) {
  auto rel = build_prefix_relation({sig(2, {1, 0, 1})});
  ASSERT_EQ(rel.pairs.size(), 1U);
  EXPECT_EQ(rel.pairs[0], (std::pair<std::size_t, std::size_t>{0, 0}));
}

// Exhaustive: the relation equals the naive all-pairs prefix check and is a
// partial order.
TEST(PrefixRelation, AxiomsExhaustiveUpToHorizonFour) {
  for (std::size_t h = 0; h <= 4; ++h) {
    auto rel = build_prefix_relation(enumerate_causal_signals(bits(), Horizon{Tick{h}}));
    const auto& s = rel.signals;
    const std::size_t n = s.size();
    std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
    for (auto [a, b] : rel.pairs) leq[a][b] = 1;
    for (std::size_t a = 0; a < n; ++a) {
      EXPECT_TRUE(leq[a][a]);
      for (std::size_t b = 0; b < n; ++b) {
        ASSERT_EQ(static_cast<bool>(leq[a][b]), prefix_leq(s[a], s[b]));
        if (a != b && leq[a][b]) EXPECT_FALSE(leq[b][a]);
        if (!leq[a][b]) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (leq[b][c]) EXPECT_TRUE(leq[a][c]);
        }
      }
    }
  }
}

TEST(PrefixRelation, PrefixesOfOneTraceFormAChain) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    std::vector<Symbol> samples(n + 1);
    for (auto& x : samples) x = static_cast<Symbol>(rng() % 2);
    const auto full = sig(n, samples);
    std::vector<CausalSignal> chain;
    for (std::size_t t = 0; t <= n; ++t) chain.push_back(full.prefix(Tick{t}));
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j <= n; ++j) {
        EXPECT_EQ(prefix_leq(chain[i], chain[j]), i <= j);
      }
    }
  }
}

TEST(PrefixLeq, MutualImpliesEqual) {
  auto all = enumerate_causal_signals(make_alphabet(Alphabet{"x", "y", "z"}), Horizon{Tick{2}});
  for (const auto& a : all) {
    for (const auto& b : all) {
      if (prefix_leq(a, b) && prefix_leq(b, a)) EXPECT_EQ(a, b);
    }
  }
}
