#include "entronet/cli.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "entronet/circuits.hpp"
#include "entronet/core.hpp"
#include "entronet/gates.hpp"
#include "entronet/network_io.hpp"
#include "entronet/patterns.hpp"
#include "entronet/thermo.hpp"

namespace entronet {

namespace {

using nlohmann::json;

json network_json(const ObservationNetwork& net) {
  return json::parse(network_to_json(net));
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot write file: '" + path + "'");
  f << content;
  if (!f) throw std::invalid_argument("failed while writing '" + path + "'");
}

int cmd_enumerate(int n, const std::string& format, std::ostream& out, std::ostream& err) {
  const auto patterns = enumerate_patterns(n);
  if (format == "dot") {
    for (const auto& [label, net] : patterns) out << to_dot(net, label);
  } else if (format == "json") {
    json j = json::array();
    for (const auto& [label, net] : patterns) {
      const PatternClass cls = classify_pattern(net);
      j.push_back({{"kind", pattern_kind_name(cls.kind)},
                   {"canonical_label", label},
                   {"network", network_json(net)}});
    }
    out << j.dump(2) << "\n";
  } else {
    for (const auto& [label, net] : patterns)
      out << label << ' ' << pattern_kind_name(classify_pattern(net).kind) << '\n';
  }
  err << patterns.size() << " distinct pattern" << (patterns.size() == 1 ? "" : "s") << " with "
      << n << " observation" << (n == 1 ? "" : "s") << "\n";
  return 0;
}

int cmd_classify(const std::string& path, const std::string& format, std::ostream& out) {
  const ObservationNetwork net = load_network(path);
  const PatternClass cls = classify_pattern(net);
  if (format == "json") {
    json j = {{"kind", pattern_kind_name(cls.kind)}, {"canonical_label", cls.canonical_label}};
    out << j.dump(2) << "\n";
  } else {
    out << pattern_kind_name(cls.kind) << ' ' << cls.canonical_label << '\n';
  }
  return 0;
}

int cmd_gate(const std::string& inputs, const std::string& kind_name, const std::string& format,
             const std::string& out_path, std::ostream& out) {
  const bool a = inputs[0] == '1';
  const bool b = inputs[2] == '1';
  const GateKind kind = kind_name == "nor" ? GateKind::nor : GateKind::nand;
  const GateState state = evaluate_gate(a, b, kind);

  if (!out_path.empty()) save_network(state.network, out_path);

  if (format == "json") {
    const GateReadout readout;
    json j;
    j["inputs"] = {{"a", a}, {"b", b}};
    j["kind"] = gate_kind_name(kind);
    j["splits"] = {{"a", state.a_splits}, {"b", state.b_splits}, {"o", state.o_splits}};
    j["u"] = state.u;
    j["readout"] = {{"normalization_max", readout.normalization_max},
                    {"nand_threshold", readout.nand_threshold},
                    {"nor_threshold", readout.nor_threshold}};
    j["output"] = state.output;
    j["network"] = network_json(state.network);
    out << j.dump(2) << "\n";
  } else if (format == "dot") {
    out << to_dot(state.network, gate_kind_name(kind));
  } else if (format == "ledger") {
    out << ledger_to_csv(state.network);
  } else {
    out << "inputs: a=" << (a ? 1 : 0) << " b=" << (b ? 1 : 0) << "\n";
    out << "kind: " << gate_kind_name(kind) << "\n";
    out << "splits: a=" << state.a_splits << " b=" << state.b_splits << " o=" << state.o_splits
        << "\n";
    out << "u: " << format_double(state.u) << "\n";
    out << "output: " << (state.output ? 1 : 0) << "\n";
  }
  return 0;
}

int cmd_search(int observations, int max_elements, const std::string& format, std::ostream& out,
               std::ostream& err) {
  const auto tables = search_reachable_tables(observations, max_elements);
  if (format == "json") {
    json j = json::array();
    for (unsigned mask : tables) j.push_back({{"mask", mask}, {"name", truth_table_name(mask)}});
    out << j.dump(2) << "\n";
  } else {
    for (unsigned mask : tables) out << mask << ' ' << truth_table_name(mask) << '\n';
  }
  err << "reachable tables: " << tables.size() << " of 16 (observations=" << observations
      << ", max_elements=" << max_elements << ")\n";
  return 0;
}

int cmd_synthesize(const std::string& expr_text, const std::string& format, double kelvin,
                   const std::string& out_path, std::ostream& out, std::ostream& err) {
  const BoolExprPtr expr = parse_expression(expr_text);
  const NandNetlist netlist = synthesize_nand_netlist(*expr);
  const std::string text = netlist_to_text(netlist);

  if (!out_path.empty()) {
    write_file(out_path, text);
    err << "wrote " << netlist.gates.size() << "-gate netlist to " << out_path << "\n";
  }

  if (format == "dot") {
    out << netlist_to_dot(netlist);
  } else if (format == "report") {
    const NetlistReport report = netlist_report(netlist, kelvin);
    out << "gates: " << report.gate_count << "\n";
    out << "depth: " << report.depth << "\n";
    out << "budget_splits: " << report.budget_splits << "\n";
    out << "budget_physical_nats: " << format_double(report.budget_physical_nats) << "\n";
    out << "budget_joules_at_" << format_double(kelvin) << "K: "
        << format_double(report.budget_joules) << "\n";
  } else if (out_path.empty()) {
    out << text;
  }
  return 0;
}

int cmd_eval_netlist(const std::string& path, const std::string& assign, bool table,
                     const std::string& mode_name, std::ostream& out, std::ostream& err) {
  const NandNetlist netlist = load_netlist(path);
  const EvalMode mode = mode_name == "pure" ? EvalMode::pure : EvalMode::entropy;

  auto print_bits = [&](const std::vector<bool>& bits) {
    for (std::size_t i = 0; i < bits.size(); ++i) out << (i ? " " : "") << (bits[i] ? 1 : 0);
    out << "\n";
  };

  if (table) {
    if (netlist.inputs.size() > 16)
      throw std::invalid_argument("truth table over " + std::to_string(netlist.inputs.size()) +
                                  " inputs is too large");
    const std::size_t rows = std::size_t{1} << netlist.inputs.size();
    for (std::size_t row = 0; row < rows; ++row) {
      std::map<std::string, bool> assignment;
      for (std::size_t i = 0; i < netlist.inputs.size(); ++i) {
        const bool bit = (row >> (netlist.inputs.size() - 1 - i)) & 1;
        assignment[netlist.inputs[i]] = bit;
        out << netlist.inputs[i] << '=' << (bit ? 1 : 0) << ' ';
      }
      out << "-> ";
      print_bits(evaluate_netlist(netlist, assignment, mode));
    }
    return 0;
  }

  // --assign a=1,b=0
  std::map<std::string, bool> assignment;
  std::istringstream fields(assign);
  std::string field;
  while (std::getline(fields, field, ',')) {
    const auto eq = field.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 2 != field.size() ||
        (field[eq + 1] != '0' && field[eq + 1] != '1')) {
      err << "error: --assign expects comma-separated name=0|1 pairs (got '" << field << "')\n";
      return 2;
    }
    assignment[field.substr(0, eq)] = field[eq + 1] == '1';
  }
  print_bits(evaluate_netlist(netlist, assignment, mode));
  return 0;
}

int cmd_simulate(const std::string& config_path, int trials, std::uint64_t seed, bool seed_set,
                 const std::string& format, std::ostream& out, std::ostream& err) {
  ThermoGateConfig config = load_thermo_config(config_path);
  const std::uint64_t used_seed = seed_set ? seed : config.seed;
  const ThermoReport report = run_monte_carlo(config, trials, used_seed);

  if (format == "json") {
    json j;
    j["trials"] = trials;
    j["seed"] = used_seed;
    j["pairs"] = json::array();
    for (const ThermoPairStats& stats : report.pairs)
      j["pairs"].push_back({{"a", stats.a ? 1 : 0},
                            {"b", stats.b ? 1 : 0},
                            {"trials", stats.trials},
                            {"correct", stats.correct},
                            {"accuracy", stats.accuracy},
                            {"mean_u", stats.mean_u},
                            {"std_u", stats.std_u}});
    out << j.dump(2) << "\n";
  } else {
    out << monte_carlo_csv(report);
  }
  err << "simulated " << trials << " trials per input pair (seed " << used_seed << ")\n";
  return 0;
}

int cmd_profile(int samples, const std::string& mode_name, std::ostream& out) {
  const TransitionMode mode =
      mode_name == "kronecker" ? TransitionMode::kronecker : TransitionMode::binary_entropy;
  out << "t,entropy_nats\n";
  for (int i = 0; i < samples; ++i) {
    const double t = static_cast<double>(i) / (samples - 1);
    out << format_double(t) << ',' << format_double(transition_profile(t, mode)) << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Observation-network entropy toolkit"};
  app.name("entronet");
  app.require_subcommand(1);

  // enumerate
  int enum_n = 0;
  std::string enum_format = "names";
  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "List the distinct patterns with exactly N observations");
  enumerate_cmd->add_option("-n,--n", enum_n, "number of observations")
      ->required()
      ->check(CLI::Range(1, 5));
  enumerate_cmd->add_option("--format", enum_format, "output format")
      ->check(CLI::IsMember({"names", "dot", "json"}))
      ->capture_default_str();

  // classify
  std::string classify_file, classify_format = "text";
  auto* classify_cmd =
      app.add_subcommand("classify", "Name the shape of a network stored as JSON");
  classify_cmd->add_option("--file", classify_file, "network JSON file")->required();
  classify_cmd->add_option("--format", classify_format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  // gate
  std::string gate_inputs, gate_kind = "nand", gate_format = "text", gate_out;
  auto* gate_cmd = app.add_subcommand("gate", "Evaluate a two-input gate from input bits");
  gate_cmd->add_option("--inputs", gate_inputs, "input bits as A,B")
      ->required()
      ->check(CLI::IsMember({"0,0", "0,1", "1,0", "1,1"}));
  gate_cmd->add_option("--kind", gate_kind, "gate kind")
      ->check(CLI::IsMember({"nand", "nor"}))
      ->capture_default_str();
  gate_cmd->add_option("--format", gate_format, "output format")
      ->check(CLI::IsMember({"text", "json", "dot", "ledger"}))
      ->capture_default_str();
  gate_cmd->add_option("--out", gate_out, "also write the gate network JSON to this file");

  // search
  int search_obs = 2, search_elems = 6;
  std::string search_format = "names";
  auto* search_cmd = app.add_subcommand(
      "search", "Truth tables reachable within an observation and element budget");
  search_cmd->add_option("--observations", search_obs, "observation budget")
      ->required()
      ->check(CLI::Range(1, 3));
  search_cmd->add_option("--max-elements", search_elems, "element budget")
      ->required()
      ->check(CLI::Range(2, 6));
  search_cmd->add_option("--format", search_format, "output format")
      ->check(CLI::IsMember({"names", "json"}))
      ->capture_default_str();

  // synthesize
  std::string synth_expr, synth_format = "netlist", synth_out;
  double synth_kelvin = 300.0;
  auto* synth_cmd =
      app.add_subcommand("synthesize", "Lower a boolean expression to a NAND netlist");
  synth_cmd->add_option("--expr", synth_expr, "expression over & | ^ ! and identifiers")
      ->required();
  synth_cmd->add_option("--format", synth_format, "output format")
      ->check(CLI::IsMember({"netlist", "dot", "report"}))
      ->capture_default_str();
  synth_cmd->add_option("--kelvin", synth_kelvin, "temperature for the report's energy budget")
      ->capture_default_str();
  synth_cmd->add_option("--out", synth_out, "write the netlist to this file");

  // eval-netlist
  std::string eval_file, eval_assign, eval_mode = "entropy";
  bool eval_table = false;
  auto* eval_cmd = app.add_subcommand("eval-netlist", "Evaluate a stored NAND netlist");
  eval_cmd->add_option("--file", eval_file, "netlist file")->required();
  auto* assign_opt =
      eval_cmd->add_option("--assign", eval_assign, "input assignment, e.g. a=1,b=0");
  auto* table_flag =
      eval_cmd->add_flag("--table", eval_table, "print the full truth table instead");
  assign_opt->excludes(table_flag);
  table_flag->excludes(assign_opt);
  eval_cmd->add_option("--mode", eval_mode, "gate evaluation mode")
      ->check(CLI::IsMember({"pure", "entropy"}))
      ->capture_default_str();

  // simulate
  std::string sim_config, sim_format = "csv";
  int sim_trials = 10000;
  std::uint64_t sim_seed = 0;
  auto* sim_cmd =
      app.add_subcommand("simulate", "Monte Carlo of the reservoir gate from a JSON config");
  sim_cmd->add_option("--config", sim_config, "thermo config JSON file")->required();
  sim_cmd->add_option("--trials", sim_trials, "trials per input pair")
      ->check(CLI::Range(1, 100000000))
      ->capture_default_str();
  auto* sim_seed_opt = sim_cmd->add_option("--seed", sim_seed, "override the config seed");
  sim_cmd->add_option("--format", sim_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  // profile
  int profile_samples = 0;
  std::string profile_mode;
  auto* profile_cmd =
      app.add_subcommand("profile", "Sample a two-state transition entropy profile as CSV");
  profile_cmd->add_option("--samples", profile_samples, "sample count over [0, 1]")
      ->required()
      ->check(CLI::Range(2, 10000000));
  profile_cmd->add_option("--mode", profile_mode, "profile shape")
      ->required()
      ->check(CLI::IsMember({"kronecker", "binary-entropy"}));

  // CLI11 wants argv-style input; synthesize it from the args vector.
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("entronet");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (enumerate_cmd->parsed()) return cmd_enumerate(enum_n, enum_format, out, err);
    if (classify_cmd->parsed()) return cmd_classify(classify_file, classify_format, out);
    if (gate_cmd->parsed()) return cmd_gate(gate_inputs, gate_kind, gate_format, gate_out, out);
    if (search_cmd->parsed()) return cmd_search(search_obs, search_elems, search_format, out, err);
    if (synth_cmd->parsed())
      return cmd_synthesize(synth_expr, synth_format, synth_kelvin, synth_out, out, err);
    if (eval_cmd->parsed()) {
      if (!eval_table && eval_assign.empty()) {
        err << "error: eval-netlist needs --assign or --table\n";
        return 2;
      }
      return cmd_eval_netlist(eval_file, eval_assign, eval_table, eval_mode, out, err);
    }
    if (sim_cmd->parsed())
      return cmd_simulate(sim_config, sim_trials, sim_seed, sim_seed_opt->count() > 0, sim_format,
                          out, err);
    if (profile_cmd->parsed()) return cmd_profile(profile_samples, profile_mode, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace entronet
