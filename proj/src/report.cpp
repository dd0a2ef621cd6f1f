#include "causal/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace causal::report {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

json timing(std::optional<double> wall_seconds) {
  if (!wall_seconds) return nullptr;
  return json{{"wall_seconds", *wall_seconds}};
}

}  // namespace

json to_json(const CausalSignal& signal) {
  return json{{"t", signal.t().index}, {"trace", signal.trace().names()}};
}

json to_json(const ChiImage& image) {
  json refs = json::array();
  for (const auto& r : image.refs()) {
    refs.push_back(json{{"channel", r.channel.name}, {"tick", r.tick.index}});
  }
  return refs;
}

json to_json(const AxiomReport& axioms) {
  json j;
  j["reflexive"] = axioms.reflexive;
  j["reflexivity_witness"] =
      axioms.reflexivity_witness ? to_json(*axioms.reflexivity_witness) : json(nullptr);
  j["antisymmetric"] = axioms.antisymmetric;
  j["antisymmetry_witness"] = nullptr;
  if (axioms.antisymmetry_witness) {
    j["antisymmetry_witness"] = json::array(
        {to_json(axioms.antisymmetry_witness->first), to_json(axioms.antisymmetry_witness->second)});
  }
  j["transitive"] = axioms.transitive;
  j["transitivity_witness"] = nullptr;
  if (axioms.transitivity_witness) {
    json triple = json::array();
    for (const auto& img : *axioms.transitivity_witness) triple.push_back(to_json(img));
    j["transitivity_witness"] = triple;
  }
  return j;
}

json to_json(const Prop2Witness& w) {
  return json{{"s0", to_json(w.s0)}, {"s1", to_json(w.s1)}, {"u0", to_json(w.u0)},
              {"u1", to_json(w.u1)}, {"X", to_json(w.x)},   {"Y", to_json(w.y)}};
}

json to_json(const ClassificationStats& s) {
  return json{{"horizon", s.horizon},
              {"signals", s.signals},
              {"relation_pairs", s.relation_pairs},
              {"images", s.images},
              {"derived_pairs", s.derived_pairs},
              {"undefined_signals", s.undefined_signals},
              {"excluded_undefined", s.excluded_undefined},
              {"degenerate_horizon", s.degenerate_horizon}};
}

json classify_report(const CircuitElement& circuit, const Classification& result,
                     std::optional<double> wall_seconds) {
  json j;
  j["circuit"] = circuit.name;
  j["command"] = "classify";
  j["verdict"] = to_string(result.verdict);
  j["axioms"] = result.axioms ? to_json(*result.axioms) : json(nullptr);
  if (result.axioms) {
    j["axioms"]["failure"] = result.failure.empty() ? json(nullptr) : json(result.failure);
  }
  j["witness"] = result.witness ? to_json(*result.witness) : json(nullptr);
  j["stats"] = to_json(result.stats);
  j["timing"] = timing(wall_seconds);
  return j;
}

std::string classify_text(const CircuitElement& circuit, const Classification& result) {
  std::ostringstream os;
  const auto& s = result.stats;
  os << "circuit: " << circuit.name << '\n';
  os << "verdict: " << to_string(result.verdict) << '\n';
  if (result.axioms) {
    const auto& a = *result.axioms;
    os << "axioms: reflexive=" << a.reflexive << " antisymmetric=" << a.antisymmetric
       << " transitive=" << a.transitive << '\n';
    if (a.antisymmetry_witness) {
      os << "antisymmetry fails on " << to_string(a.antisymmetry_witness->first) << " <-> "
         << to_string(a.antisymmetry_witness->second) << '\n';
    }
    if (a.transitivity_witness) {
      const auto& [x, y, z] = *a.transitivity_witness;
      os << "transitivity fails on " << to_string(x) << " -> " << to_string(y) << " -> "
         << to_string(z) << '\n';
    }
  }
  if (result.witness) {
    const auto& w = *result.witness;
    os << "witness: X=" << to_string(w.x) << " Y=" << to_string(w.y) << '\n';
    os << "  s0=" << to_string(w.s0) << " <= s1=" << to_string(w.s1) << '\n';
    os << "  u0=" << to_string(w.u0) << " <= u1=" << to_string(w.u1) << '\n';
  }
  if (result.verdict != Verdict::NotFundamentalForm) {
    os << "stats: horizon=" << s.horizon << " signals=" << s.signals
       << " relation_pairs=" << s.relation_pairs << " images=" << s.images
       << " derived_pairs=" << s.derived_pairs << " excluded_undefined=" << s.excluded_undefined
       << (s.degenerate_horizon ? " (degenerate horizon)" : "") << '\n';
  }
  return os.str();
}

json check_report(const CircuitElement& circuit, Horizon horizon, std::size_t trials,
                  std::uint64_t seed, const std::optional<PropertyReport>& chi_soundness,
                  const PropertyReport& causality, std::optional<double> wall_seconds) {
  auto prop = [](const PropertyReport& p) {
    return json{{"trials", p.trials},
                {"mutations", p.mutations},
                {"violations", p.violations},
                {"undefined_trials", p.undefined_trials},
                {"ok", p.ok()}};
  };
  json results;
  results["chi_soundness"] = chi_soundness ? prop(*chi_soundness) : json(nullptr);
  results["causality"] = prop(causality);
  return json{{"circuit", circuit.name},
              {"command", "check"},
              {"verdict", (!chi_soundness || chi_soundness->ok()) && causality.ok() ? "pass"
                                                                                      : "fail"},
              {"results", results},
              {"stats", {{"horizon", horizon.max_tick.index}, {"trials", trials}, {"seed", seed}}},
              {"timing", timing(wall_seconds)}};
}

Stimulus parse_stimulus(std::string_view csv) {
  std::vector<std::vector<std::string>> rows;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto end = csv.find('\n', start);
    if (end == std::string_view::npos) end = csv.size();
    const std::string line = trim(csv.substr(start, end - start));
    if (!line.empty()) rows.push_back(split(line, ','));
    start = end + 1;
  }
  if (rows.empty() || rows[0].empty() || rows[0][0] != "tick") {
    throw UsageError("stimulus: header must start with 'tick'");
  }
  Stimulus st;
  st.columns.assign(rows[0].begin() + 1, rows[0].end());
  std::set<std::string> seen;
  for (const auto& c : st.columns) {
    if (c.empty() || !seen.insert(c).second) {
      throw UsageError("stimulus: empty or duplicate column '" + c + "'");
    }
    st.values[c];
  }
  std::set<std::size_t> ticks;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != rows[0].size()) {
      throw UsageError("stimulus: row " + std::to_string(r) + " has " +
                       std::to_string(row.size()) + " fields, header has " +
                       std::to_string(rows[0].size()));
    }
    std::size_t tick = 0;
    try {
      std::size_t used = 0;
      tick = std::stoul(row[0], &used);
      if (used != row[0].size()) throw std::invalid_argument("tick");
    } catch (const std::exception&) {
      throw UsageError("stimulus: bad tick '" + row[0] + "'");
    }
    if (!ticks.insert(tick).second) {
      throw UsageError("stimulus: duplicate tick " + std::to_string(tick));
    }
    if (tick != r - 1) {
      throw UsageError("stimulus: ticks must be contiguous from 0; expected " +
                       std::to_string(r - 1) + ", got " + std::to_string(tick));
    }
    for (std::size_t c = 0; c < st.columns.size(); ++c) {
      st.values[st.columns[c]].push_back(row[c + 1]);
    }
  }
  st.length = rows.size() - 1;
  if (st.length == 0) {
    throw UsageError("stimulus: no rows");
  }
  return st;
}

std::vector<std::string> collect_values(const Stimulus& stimulus,
                                        const std::vector<std::string>& columns,
                                        std::vector<std::string> seed) {
  for (const auto& col : columns) {
    auto it = stimulus.values.find(col);
    if (it == stimulus.values.end()) continue;
    for (const auto& v : it->second) {
      if (std::find(seed.begin(), seed.end(), v) == seed.end()) seed.push_back(v);
    }
  }
  return seed;
}

BoundStimulus bind_stimulus(const Stimulus& stimulus, const CircuitElement& circuit) {
  std::set<std::string> expected;
  auto column = [&](const std::string& name, const AlphabetRef& alphabet) {
    expected.insert(name);
    auto it = stimulus.values.find(name);
    if (it == stimulus.values.end()) {
      if (name == "control" && alphabet->size() == 1) {
        return Trace(alphabet, std::vector<Symbol>(stimulus.length, 0));
      }
      throw UsageError("stimulus: missing column '" + name + "'");
    }
    return Trace::from_names(alphabet, it->second);
  };
  Trace control = column("control", circuit.control_alphabet);
  std::vector<Trace> inputs;
  for (const auto& ch : circuit.inputs) {
    inputs.push_back(column(ch.id.name, ch.alphabet));
  }
  for (const auto& c : stimulus.columns) {
    if (!expected.count(c)) {
      throw UsageError("stimulus: unknown column '" + c + "'");
    }
  }
  return {std::move(control), std::move(inputs)};
}

std::string trace_csv(const std::vector<OutputSample>& outputs, const Alphabet& output_alphabet) {
  std::ostringstream os;
  os << "tick,output\n";
  for (const auto& o : outputs) {
    os << o.tick.index << ',' << (o.value ? output_alphabet.name(*o.value) : "UNDEF") << '\n';
  }
  return os.str();
}

Trace parse_control_list(std::string_view text, const AlphabetRef& alphabet) {
  const auto names = split(text, ',');
  if (names.size() == 1 && names[0].empty()) {
    throw UsageError("empty control trace");
  }
  return Trace::from_names(alphabet, names);
}

}  // namespace causal::report
