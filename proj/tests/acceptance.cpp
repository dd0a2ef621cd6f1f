// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "causal/builtins.hpp"
#include "causal/classify.hpp"
#include "causal/cli.hpp"
#include "causal/dsl.hpp"

using namespace causal;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string circuit_path(const std::string& name) {
  return std::string(CIRCUITS_DIR) + "/" + name + ".kcir";
}

CircuitElement load(const std::string& name) { return dsl::elaborate(dsl::parse_file(circuit_path(name))); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

AlphabetRef bits() {
  static const AlphabetRef a = make_alphabet(Alphabet::binary());
  return a;
}

std::size_t rise_count(std::span<const Symbol> c) {
  std::size_t n = 0;
  for (std::size_t u = 1; u < c.size(); ++u) n += c[u - 1] == 0 && c[u] == 1;
  return n;
}

ChiImage image_at(const char* channel, std::size_t tick) {
  return ChiImage({RefPoint{ChannelId{channel}, Tick{tick}}});
}

// Each criterion returns a one-line detail and sets ok.
using Criterion = std::function<std::string(bool& ok)>;

std::string verdicts(bool& ok) {
  struct Case {
    const char* name;
    Verdict expect;
  };
  std::ostringstream detail;
  double worst = 0;
  ok = true;
  for (Case c : {Case{"dff", Verdict::TimePreserving}, Case{"counter", Verdict::TimePreserving},
                 Case{"togglers", Verdict::TimePreserving}, Case{"mux", Verdict::TimePreserving},
                 Case{"abmem", Verdict::NotTimePreserving},
                 Case{"srlatch", Verdict::NotFundamentalForm}}) {
    const auto circuit = load(c.name);
    const auto start = Clock::now();
    const auto result = classify(circuit, Horizon{Tick{4}});
    const double secs = seconds_since(start);
    worst = std::max(worst, secs);
    bool good = result.verdict == c.expect && secs < 30.0;
    if (c.expect == Verdict::NotTimePreserving) {
      good = good && result.witness && result.witness->x == image_at("D", 0) &&
             result.witness->y == image_at("D", 1) && result.witness->validate(*circuit.chi);
    }
    if (!good) detail << c.name << "=" << to_string(result.verdict) << " ";
    ok = ok && good;
  }
  const auto circuit = load("abmem");
  const auto start = Clock::now();
  const auto small = classify(circuit, Horizon{Tick{2}});
  const double secs = seconds_since(start);
  if (small.verdict != Verdict::NotTimePreserving || secs >= 1.0) {
    ok = false;
    detail << "abmem@2 took " << secs << "s ";
  }
  detail << "slowest horizon-4 run " << worst << "s, abmem@2 " << secs << "s";
  return detail.str();
}

std::string truth_tables(bool& ok) {
  std::size_t checked = 0, mismatches = 0;
  for (std::size_t h = 0; h <= 6; ++h) {
    const std::size_t n = h + 1;
    for (std::size_t cm = 0; cm < (1U << n); ++cm) {
      std::vector<Symbol> c(n);
      for (std::size_t u = 0; u < n; ++u) c[u] = (cm >> (n - 1 - u)) & 1U;
      const auto clock = CausalSignal::whole(Trace(bits(), c));
      for (std::size_t dm = 0; dm < (1U << n); ++dm) {
        std::vector<Symbol> d(n);
        for (std::size_t u = 0; u < n; ++u) d[u] = (dm >> (n - 1 - u)) & 1U;
        // Last rising tick, or none.
        std::optional<Symbol> expect;
        for (std::size_t u = 1; u < n; ++u) {
          if (c[u - 1] == 0 && c[u] == 1) expect = d[u];
        }
        ++checked;
        if (dff_eval(clock, CausalSignal::whole(Trace(bits(), d))) != expect) ++mismatches;
      }
    }
  }
  struct Row {
    Symbol s, r;
    std::optional<Symbol> q;
  };
  std::size_t sr_bad = 0;
  for (Row row : {Row{0, 0, std::nullopt}, Row{1, 0, 1}, Row{0, 1, 0}, Row{1, 1, 0}}) {
    if (sr_eval(CausalSignal::whole(Trace(bits(), {row.s})),
                CausalSignal::whole(Trace(bits(), {row.r}))) != row.q) {
      ++sr_bad;
    }
  }
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    // A decisive input followed by a run of (0,0) holds.
    const Symbol set = rng() % 2;
    const std::size_t hold = 1 + rng() % 10;
    std::vector<Symbol> s{set}, r{static_cast<Symbol>(1 - set)};
    s.resize(hold + 1, 0);
    r.resize(hold + 1, 0);
    const auto ss = CausalSignal::whole(Trace(bits(), s));
    const auto rr = CausalSignal::whole(Trace(bits(), r));
    for (std::size_t t = 0; t <= hold; ++t) {
      if (sr_eval(ss.prefix(Tick{t}), rr.prefix(Tick{t})) != set) ++sr_bad;
    }
  }
  ok = mismatches == 0 && sr_bad == 0;
  return "dff " + std::to_string(checked) + " cases, " + std::to_string(mismatches) +
         " mismatches; sr " + std::to_string(sr_bad) + " mismatches";
}

std::string prefix_axioms(bool& ok) {
  const auto rel = build_prefix_relation(enumerate_causal_signals(bits(), Horizon{Tick{4}}));
  const std::size_t n = rel.signals.size();
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (auto [a, b] : rel.pairs) leq[a][b] = 1;
  std::size_t violations = 0;
  for (std::size_t a = 0; a < n; ++a) {
    violations += !leq[a][a];
    for (std::size_t b = 0; b < n; ++b) {
      violations += leq[a][b] != prefix_leq(rel.signals[a], rel.signals[b]);
      if (a != b && leq[a][b] && leq[b][a]) ++violations;
      if (!leq[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c) violations += leq[b][c] && !leq[a][c];
    }
  }
  ok = n == 62 && violations == 0;
  return std::to_string(n) + " signals, " + std::to_string(violations) + " violations";
}

std::string soundness(bool& ok) {
  std::vector<CircuitElement> circuits{make_dff(), make_mux(), make_sync(counter_spec(2)),
                                       make_multiclock(toggler_spec(), toggler_spec()),
                                       make_abmem(), load("enable_counter"), load("cdc_sampler")};
  std::size_t changes = 0, causal_changes = 0, mutations = 0;
  for (const auto& c : circuits) {
    const auto s = chi_soundness_check(c, Horizon{Tick{8}}, 1000, 42);
    const auto k = causality_check(c, Horizon{Tick{8}}, 1000, 42);
    changes += s.violations;
    mutations += s.mutations;
    causal_changes += k.violations;
  }
  causal_changes += causality_check(make_sr_latch(), Horizon{Tick{8}}, 1000, 42).violations;
  ok = changes == 0 && causal_changes == 0 && mutations > 0;
  return std::to_string(mutations) + " out-of-image mutations, " + std::to_string(changes) +
         " output changes; causality " + std::to_string(causal_changes) + " changes";
}

std::string monotonicity(bool& ok) {
  const auto alpha = make_alphabet(memory_control_alphabet());
  const auto base =
      find_prop2_witness(abmem_chi, build_prefix_relation(enumerate_causal_signals(alpha, Horizon{Tick{2}})));
  ok = base.has_value();
  std::string detail;
  for (std::size_t h : {3U, 4U}) {
    const auto w = find_prop2_witness(
        abmem_chi, build_prefix_relation(enumerate_causal_signals(alpha, Horizon{Tick{h}})), 4);
    const bool same = base && w && w->s0 == base->s0 && w->s1 == base->s1 && w->u0 == base->u0 &&
                      w->u1 == base->u1;
    const bool valid = base && base->validate(abmem_chi);
    ok = ok && w && (same || valid);
    detail += "h=" + std::to_string(h) + (same ? " same minimum; " : " revalidated; ");
  }
  return detail;
}

std::string determinism(bool& ok) {
  ok = true;
  std::string differing;
  for (const char* name : {"dff", "srlatch", "mux", "counter", "togglers", "abmem"}) {
    std::string outputs[2];
    const char* jobs[2] = {"1", "8"};
    for (int i = 0; i < 2; ++i) {
      std::ostringstream out, err;
      const int code = cli::run_command({"classify", "--circuit", circuit_path(name), "--horizon", "4",
                                         "--format", "json", "--jobs", jobs[i]},
                                        out, err);
      outputs[i] = code == 0 ? out.str() : "exit " + std::to_string(code);
    }
    if (outputs[0] != outputs[1] || outputs[0].empty()) {
      ok = false;
      differing += std::string(name) + " ";
    }
  }
  return ok ? "6 circuits byte-identical" : "differing: " + differing;
}

std::string parser(bool& ok) {
  std::size_t valid = 0, round_trips = 0, invalid = 0, located = 0;
  for (const auto& e : fs::directory_iterator(fs::path(CORPUS_DIR) / "valid")) {
    ++valid;
    try {
      const auto ast = dsl::parse(slurp(e.path()));
      if (dsl::parse(dsl::print(ast)) == ast) ++round_trips;
    } catch (const dsl::DslError&) {
    }
  }
  for (const auto& e : fs::directory_iterator(fs::path(CORPUS_DIR) / "invalid")) {
    ++invalid;
    const std::string text = slurp(e.path());
    std::size_t line = 0, col = 0;
    char token[64] = {};
    if (std::sscanf(text.c_str(), "# expect: %zu:%zu %63s", &line, &col, token) != 3) continue;
    try {
      dsl::elaborate(dsl::parse(text));
    } catch (const dsl::DslError& err) {
      const auto& s = err.span();
      if (s.line == line && s.column >= col && s.column + s.length <= col + std::strlen(token)) {
        ++located;
      }
    }
  }
  ok = valid == 20 && round_trips == 20 && invalid == 10 && located == 10;
  return std::to_string(round_trips) + "/" + std::to_string(valid) + " round-trip, " +
         std::to_string(located) + "/" + std::to_string(invalid) + " errors inside token";
}

std::string counter(bool& ok) {
  const std::vector<CircuitElement> circuits{make_sync(counter_spec(2)), load("counter")};
  std::mt19937_64 rng(7);
  std::size_t mismatches = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Symbol> c(17), d(17);
    for (auto& x : c) x = rng() % 2;
    for (auto& x : d) x = rng() % 2;
    const auto clock = CausalSignal::whole(Trace(bits(), c));
    const std::vector<CausalSignal> in{CausalSignal::whole(Trace(bits(), d))};
    for (const auto& circuit : circuits) {
      if (circuit.eval(clock, in) != static_cast<Symbol>(rise_count(c) % 4)) ++mismatches;
    }
  }
  ok = mismatches == 0;
  return "500 traces x 2 counters, " + std::to_string(mismatches) + " mismatches";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Criterion>> criteria{
      {"verdict reproduction", verdicts},
      {"truth-table conformance", truth_tables},
      {"prefix-order axioms", prefix_axioms},
      {"restriction soundness and causality", soundness},
      {"witness monotonicity", monotonicity},
      {"jobs determinism", determinism},
      {"parser corpus", parser},
      {"sync counter semantics", counter},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    bool ok = false;
    std::string detail;
    try {
      detail = criteria[i].second(ok);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    failures += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
              << "): " << detail << '\n';
  }
  return failures == 0 ? 0 : 1;
}
