#include "causal/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <sstream>

#include "causal/builtins.hpp"
#include "causal/classify.hpp"
#include "causal/dsl.hpp"
#include "causal/report.hpp"

namespace causal::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw UsageError("cannot read '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

struct Options {
  std::string circuit;
  std::size_t horizon = 4;
  std::string format = "text";
  unsigned jobs = 1;
  bool timing = false;
  std::string stimulus;
  std::string out_path;
  bool allow_undef = false;
  std::string control;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
};

int classify_cmd(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const CircuitElement circuit = dsl::elaborate(dsl::parse_file(o.circuit));
  const auto result = classify(circuit, Horizon{Tick{o.horizon}}, {o.jobs});
  const auto wall = o.timing ? std::optional{seconds_since(start)} : std::nullopt;
  if (o.format == "json") {
    write_json(out, report::classify_report(circuit, result, wall));
  } else {
    out << report::classify_text(circuit, result);
    if (wall) out << "wall_seconds: " << *wall << '\n';
  }
  return kExitOk;
}

int simulate_cmd(const Options& o, std::ostream& out, std::ostream& err) {
  const auto ast = dsl::parse_file(o.circuit);
  const auto stimulus = report::parse_stimulus(read_file(o.stimulus));
  dsl::ElaborateOptions eo;
  if (dsl::is_data_polymorphic(ast.kind)) {
    std::vector<std::string> data_columns;
    for (const auto& ch : dsl::elaborate(ast).inputs) {
      data_columns.push_back(ch.id.name);
    }
    eo.data_alphabet = Alphabet(report::collect_values(stimulus, data_columns, {"0", "1"}));
  }
  const CircuitElement circuit = dsl::elaborate(ast, eo);
  const auto bound = report::bind_stimulus(stimulus, circuit);
  const auto outputs = output_stream(circuit, bound.control, bound.inputs);
  const std::string csv = report::trace_csv(outputs, *circuit.output_alphabet);
  if (o.out_path.empty()) {
    out << csv;
  } else {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + o.out_path + "'");
    f << csv;
  }
  const bool undefined = std::any_of(outputs.begin(), outputs.end(),
                                     [](const OutputSample& s) { return !s.value; });
  if (undefined && !o.allow_undef) {
    err << "simulate: output undefined at some tick (pass --allow-undef to accept)\n";
    return kExitUndefined;
  }
  return kExitOk;
}

int chi_dump_cmd(const Options& o, std::ostream& out) {
  const CircuitElement circuit = dsl::elaborate(dsl::parse_file(o.circuit));
  if (!circuit.chi) {
    throw UsageError("circuit '" + circuit.name + "' has no restriction map");
  }
  const Trace control = report::parse_control_list(o.control, circuit.control_alphabet);
  for (std::size_t t = 0; t < control.size(); ++t) {
    const CausalSignal prefix(Tick{t}, restrict_trace(control, Tick{t}));
    const auto image = (*circuit.chi)(prefix);
    out << t << ' ' << (image ? to_string(*image) : "UNDEF") << '\n';
  }
  return kExitOk;
}

int check_cmd(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const CircuitElement circuit = dsl::elaborate(dsl::parse_file(o.circuit));
  const Horizon horizon{Tick{o.horizon}};
  std::optional<PropertyReport> soundness;
  if (circuit.chi) {
    soundness = chi_soundness_check(circuit, horizon, o.trials, o.seed);
  }
  const auto causality = causality_check(circuit, horizon, o.trials, o.seed);
  const auto wall = o.timing ? std::optional{seconds_since(start)} : std::nullopt;
  const auto j = report::check_report(circuit, horizon, o.trials, o.seed, soundness, causality, wall);
  if (o.format == "json") {
    write_json(out, j);
  } else {
    out << "circuit: " << circuit.name << '\n';
    for (const char* key : {"chi_soundness", "causality"}) {
      const auto& r = j["results"][key];
      if (r.is_null()) {
        out << key << ": not applicable (no restriction map)\n";
      } else {
        out << key << ": " << (r["ok"].get<bool>() ? "ok" : "FAILED")
            << " trials=" << r["trials"] << " mutations=" << r["mutations"]
            << " violations=" << r["violations"] << '\n';
      }
    }
    if (wall) out << "wall_seconds: " << *wall << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Classify sequential circuits by how their control signals restrict inputs",
               "kcir"};
  app.require_subcommand(1);

  auto* classify_sub = app.add_subcommand("classify", "Decide time preservation up to a horizon");
  classify_sub->add_option("--circuit", o.circuit, "Circuit file (.kcir)")->required();
  classify_sub->add_option("--horizon", o.horizon, "Largest tick enumerated")->capture_default_str();
  classify_sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  classify_sub->add_option("--jobs", o.jobs, "Worker threads")
      ->check(CLI::Range(1U, 256U))
      ->capture_default_str();
  classify_sub->add_flag("--timing", o.timing, "Include wall-clock time");

  auto* simulate_sub = app.add_subcommand("simulate", "Run a circuit over a stimulus CSV");
  simulate_sub->add_option("--circuit", o.circuit, "Circuit file (.kcir)")->required();
  simulate_sub->add_option("--stimulus", o.stimulus, "Stimulus CSV")->required();
  simulate_sub->add_option("--out", o.out_path, "Output trace CSV (default stdout)");
  simulate_sub->add_flag("--allow-undef", o.allow_undef, "Exit 0 even when outputs are undefined");

  auto* dump_sub = app.add_subcommand("chi-dump", "Print the restriction-map image per tick");
  dump_sub->add_option("--circuit", o.circuit, "Circuit file (.kcir)")->required();
  dump_sub->add_option("--control", o.control, "Control trace, e.g. \"0,1,0,1\"")->required();

  auto* check_sub = app.add_subcommand("check", "Randomized restriction-map soundness and causality");
  check_sub->add_option("--circuit", o.circuit, "Circuit file (.kcir)")->required();
  check_sub->add_option("--horizon", o.horizon, "Largest tick")->capture_default_str();
  check_sub->add_option("--trials", o.trials, "Trials per property")->capture_default_str();
  check_sub->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  check_sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  check_sub->add_flag("--timing", o.timing, "Include wall-clock time");

  std::vector<const char*> argv{"kcir"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*classify_sub) return classify_cmd(o, out);
    if (*simulate_sub) return simulate_cmd(o, out, err);
    if (*dump_sub) return chi_dump_cmd(o, out);
    return check_cmd(o, out);
  } catch (const dsl::DslError& e) {
    err << o.circuit << ':' << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace causal::cli
