#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "entronet/circuits.hpp"
#include "entronet/core.hpp"
#include "entronet/gates.hpp"
#include "entronet/network_io.hpp"
#include "entronet/patterns.hpp"
#include "entronet/thermo.hpp"

// Python bindings for the observation-network library. The C++ API is
// mirrored one-to-one; the free functions that return modified network
// copies are additionally exposed as methods on ObservationNetwork so the
// natural `net = net.observe("a", "o")` chaining works.

namespace py = pybind11;
using namespace entronet;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Observation networks: directed entropy transfer, gate readouts, "
            "NAND synthesis and reservoir simulations";

  m.attr("K_BOLTZMANN") = k_boltzmann;

  // --- core -----------------------------------------------------------

  py::enum_<Role>(m, "Role")
      .value("plain", Role::plain)
      .value("input", Role::input)
      .value("output", Role::output)
      .value("environment", Role::environment);

  py::enum_<DissipationMode>(m, "DissipationMode")
      .value("retain", DissipationMode::retain)
      .value("erase", DissipationMode::erase);

  py::enum_<TransitionMode>(m, "TransitionMode")
      .value("kronecker", TransitionMode::kronecker)
      .value("binary_entropy", TransitionMode::binary_entropy);

  py::class_<Element>(m, "Element")
      .def_readonly("id", &Element::id)
      .def_readonly("splits", &Element::splits)
      .def_readonly("role", &Element::role)
      .def("__repr__", [](const Element& e) {
        return "Element(id='" + e.id + "', splits=" + std::to_string(e.splits) +
               ", role=" + role_name(e.role) + ")";
      });

  py::class_<ObservationEdge>(m, "ObservationEdge")
      .def_readonly("observer", &ObservationEdge::observer)
      .def_readonly("observed", &ObservationEdge::observed)
      .def_readonly("order", &ObservationEdge::order)
      .def("__repr__", [](const ObservationEdge& e) {
        return "ObservationEdge(" + e.observer + " -> " + e.observed +
               ", order=" + std::to_string(e.order) + ")";
      });

  py::class_<LedgerStep>(m, "LedgerStep")
      .def_readonly("order", &LedgerStep::order)
      .def_readonly("observer", &LedgerStep::observer)
      .def_readonly("observed", &LedgerStep::observed)
      .def_readonly("delta_splits", &LedgerStep::delta_splits)
      .def_readonly("created_splits", &LedgerStep::created_splits)
      .def_readonly("env_absorbed_after", &LedgerStep::env_absorbed_after);

  py::class_<EntropyLedger>(m, "EntropyLedger")
      .def_property_readonly("steps", &EntropyLedger::steps)
      .def_property_readonly("entries", &EntropyLedger::entries)
      .def("entry_splits", &EntropyLedger::entry_splits, py::arg("id"))
      .def_property_readonly("env_absorbed_splits", &EntropyLedger::env_absorbed_splits)
      .def("total_created_splits", &EntropyLedger::total_created_splits)
      .def("reconciles", &EntropyLedger::reconciles);

  py::class_<ObservationNetwork>(m, "ObservationNetwork")
      .def(py::init<>())
      .def(py::init<double>(), py::arg("temperature"))
      .def_property_readonly("temperature", &ObservationNetwork::temperature)
      .def_property_readonly("elements", &ObservationNetwork::elements)
      .def_property_readonly("edges", &ObservationNetwork::edges)
      .def_property_readonly("ledger", &ObservationNetwork::ledger)
      .def("has_element", &ObservationNetwork::has_element, py::arg("id"))
      .def("element", &ObservationNetwork::element, py::arg("id"))
      .def("has_edge", &ObservationNetwork::has_edge, py::arg("observer"), py::arg("observed"))
      .def_property_readonly("auto_dissipate", &ObservationNetwork::auto_dissipate)
      .def("with_auto_dissipate", &ObservationNetwork::with_auto_dissipate, py::arg("on"))
      .def("with_element", &ObservationNetwork::with_element, py::arg("id"),
           py::arg("role") = Role::plain)
      .def("total_splits", &ObservationNetwork::total_splits)
      .def("total_entropy_model_nats", &ObservationNetwork::total_entropy_model_nats)
      .def("total_entropy_physical_nats", &ObservationNetwork::total_entropy_physical_nats)
      .def("observe",
           [](const ObservationNetwork& net, const std::string& observer,
              const std::string& observed) { return observe(net, observer, observed); },
           py::arg("observer"), py::arg("observed"))
      .def("observe_with_order",
           [](const ObservationNetwork& net, const std::string& observer,
              const std::string& observed,
              int order) { return observe_with_order(net, observer, observed, order); },
           py::arg("observer"), py::arg("observed"), py::arg("order"))
      .def("dissipate_to_environment",
           [](const ObservationNetwork& net, const std::string& id, DissipationMode mode) {
             return dissipate_to_environment(net, id, mode);
           },
           py::arg("id"), py::arg("mode"))
      .def("__repr__", [](const ObservationNetwork& net) {
        return "ObservationNetwork(elements=" + std::to_string(net.elements().size()) +
               ", edges=" + std::to_string(net.edges().size()) + ")";
      });

  m.def("observe",
        py::overload_cast<const ObservationNetwork&, const std::string&, const std::string&>(
            &observe),
        py::arg("net"), py::arg("observer"), py::arg("observed"));
  m.def("observe_with_order", &observe_with_order, py::arg("net"), py::arg("observer"),
        py::arg("observed"), py::arg("order"));
  m.def("dissipate_to_environment", &dissipate_to_environment, py::arg("net"), py::arg("id"),
        py::arg("mode"));

  m.def("role_name", &role_name, py::arg("role"));
  m.def("role_from_name", &role_from_name, py::arg("name"));
  m.def("element_entropy", &element_entropy, py::arg("splits"), py::arg("kelvin"));
  m.def("splits_to_model_nats", &splits_to_model_nats, py::arg("splits"), py::arg("temperature"));
  m.def("splits_to_physical_nats", &splits_to_physical_nats, py::arg("splits"),
        py::arg("temperature"));
  m.def("landauer_energy", &landauer_energy, py::arg("kelvin"));
  m.def("binary_entropy", &binary_entropy, py::arg("p"));
  m.def("transition_profile", &transition_profile, py::arg("t"), py::arg("mode"));

  // --- serialization ---------------------------------------------------

  m.def("network_to_json", &network_to_json, py::arg("net"));
  m.def("network_from_json", &network_from_json, py::arg("text"));
  m.def("load_network", &load_network, py::arg("path"));
  m.def("save_network", &save_network, py::arg("net"), py::arg("path"));
  m.def("ledger_to_csv", &ledger_to_csv, py::arg("net"));
  m.def("format_double", &format_double, py::arg("v"));

  // --- patterns --------------------------------------------------------

  py::enum_<PatternKind>(m, "PatternKind")
      .value("single", PatternKind::single)
      .value("loop", PatternKind::loop)
      .value("e_out", PatternKind::e_out)
      .value("s_in", PatternKind::s_in)
      .value("train", PatternKind::train)
      .value("other", PatternKind::other);

  py::class_<PatternClass>(m, "PatternClass")
      .def_readonly("kind", &PatternClass::kind)
      .def_readonly("canonical_label", &PatternClass::canonical_label)
      .def("__repr__", [](const PatternClass& c) {
        return "PatternClass(kind=" + pattern_kind_name(c.kind) + ", label='" +
               c.canonical_label + "')";
      });

  m.def("pattern_kind_name", &pattern_kind_name, py::arg("kind"));
  m.def("canonical_form", &canonical_form, py::arg("net"));
  m.def("are_isomorphic", &are_isomorphic, py::arg("a"), py::arg("b"));
  m.def("classify_pattern", &classify_pattern, py::arg("net"));
  m.def("enumerate_patterns", &enumerate_patterns, py::arg("n"));
  m.def("to_dot", &to_dot, py::arg("net"), py::arg("graph_label") = "");

  // --- gates -----------------------------------------------------------

  py::enum_<GateKind>(m, "GateKind")
      .value("nand", GateKind::nand)
      .value("nor", GateKind::nor);

  py::class_<GateReadout>(m, "GateReadout")
      .def(py::init<>())
      .def_readwrite("normalization_max", &GateReadout::normalization_max)
      .def_readwrite("nand_threshold", &GateReadout::nand_threshold)
      .def_readwrite("nor_threshold", &GateReadout::nor_threshold);

  py::class_<GateState>(m, "GateState")
      .def_readonly("a", &GateState::a)
      .def_readonly("b", &GateState::b)
      .def_readonly("kind", &GateState::kind)
      .def_readonly("network", &GateState::network)
      .def_readonly("a_splits", &GateState::a_splits)
      .def_readonly("b_splits", &GateState::b_splits)
      .def_readonly("o_splits", &GateState::o_splits)
      .def_readonly("u", &GateState::u)
      .def_readonly("output", &GateState::output)
      .def("__repr__", [](const GateState& s) {
        return "GateState(" + gate_kind_name(s.kind) + ", a=" + std::to_string(s.a) +
               ", b=" + std::to_string(s.b) + ", u=" + format_double(s.u) +
               ", output=" + std::to_string(s.output) + ")";
      });

  m.def("gate_kind_name", &gate_kind_name, py::arg("kind"));
  m.def("build_gate_network", &build_gate_network, py::arg("a"), py::arg("b"),
        py::arg("temperature") = 1.0);
  m.def("gate_entropies", &gate_entropies, py::arg("net"));
  m.def("normalized_output", &normalized_output, py::arg("o_splits"), py::arg("readout"));
  m.def("read_gate", &read_gate, py::arg("u"), py::arg("kind"), py::arg("readout"));
  m.def("evaluate_gate", &evaluate_gate, py::arg("a"), py::arg("b"), py::arg("kind"),
        py::arg("readout") = GateReadout{});
  m.def("search_reachable_tables", &search_reachable_tables, py::arg("n_observations"),
        py::arg("max_elements"),
        py::call_guard<py::gil_scoped_release>());
  m.def("truth_table_name", &truth_table_name, py::arg("mask"));
  m.def("truth_table_of", &truth_table_of, py::arg("kind"));

  // --- circuits ---------------------------------------------------------

  py::register_exception<ParseError>(m, "ParseError");

  py::enum_<ExprOp>(m, "ExprOp")
      .value("var", ExprOp::var)
      .value("not_op", ExprOp::not_op)
      .value("and_op", ExprOp::and_op)
      .value("or_op", ExprOp::or_op)
      .value("xor_op", ExprOp::xor_op);

  py::class_<BoolExpr, BoolExprPtr>(m, "BoolExpr")
      .def_readonly("op", &BoolExpr::op)
      .def_readonly("name", &BoolExpr::name)
      .def_readonly("lhs", &BoolExpr::lhs)
      .def_readonly("rhs", &BoolExpr::rhs);

  py::enum_<EvalMode>(m, "EvalMode")
      .value("pure", EvalMode::pure)
      .value("entropy", EvalMode::entropy);

  py::class_<NetRef>(m, "NetRef")
      .def_readonly("is_gate", &NetRef::is_gate)
      .def_readonly("index", &NetRef::index)
      .def(py::self == py::self)
      .def(py::self < py::self);

  py::class_<NandGate>(m, "NandGate")
      .def_readonly("id", &NandGate::id)
      .def_readonly("in1", &NandGate::in1)
      .def_readonly("in2", &NandGate::in2);

  py::class_<NandNetlist>(m, "NandNetlist")
      .def_readonly("inputs", &NandNetlist::inputs)
      .def_readonly("gates", &NandNetlist::gates)
      .def_readonly("outputs", &NandNetlist::outputs)
      .def("__repr__", [](const NandNetlist& n) {
        return "NandNetlist(inputs=" + std::to_string(n.inputs.size()) +
               ", gates=" + std::to_string(n.gates.size()) + ")";
      });

  py::class_<NetlistReport>(m, "NetlistReport")
      .def_readonly("gate_count", &NetlistReport::gate_count)
      .def_readonly("depth", &NetlistReport::depth)
      .def_readonly("budget_splits", &NetlistReport::budget_splits)
      .def_readonly("budget_physical_nats", &NetlistReport::budget_physical_nats)
      .def_readonly("budget_joules", &NetlistReport::budget_joules);

  m.def("parse_expression", &parse_expression, py::arg("text"));
  m.def("expression_variables", &expression_variables, py::arg("expr"));
  m.def("evaluate_expression", &evaluate_expression, py::arg("expr"), py::arg("assignment"));
  m.def("synthesize_nand_netlist", &synthesize_nand_netlist, py::arg("expr"));
  m.def("evaluate_netlist", &evaluate_netlist, py::arg("netlist"), py::arg("assignment"),
        py::arg("mode") = EvalMode::pure);
  m.def("netlist_report", &netlist_report, py::arg("netlist"), py::arg("kelvin") = 300.0);
  m.def("netlist_to_text", &netlist_to_text, py::arg("netlist"));
  m.def("netlist_from_text", &netlist_from_text, py::arg("text"));
  m.def("load_netlist", &load_netlist, py::arg("path"));
  m.def("netlist_to_dot", &netlist_to_dot, py::arg("netlist"));

  // --- thermo ------------------------------------------------------------

  py::class_<Reservoir>(m, "Reservoir")
      .def(py::init<>())
      .def_readwrite("id", &Reservoir::id)
      .def_readwrite("accumulated_entropy", &Reservoir::accumulated_entropy)
      .def_readwrite("entropy_floor", &Reservoir::entropy_floor)
      .def_readwrite("melt_fraction", &Reservoir::melt_fraction)
      .def_readwrite("melt_entropy", &Reservoir::melt_entropy)
      .def("__repr__", [](const Reservoir& r) {
        return "Reservoir(id='" + r.id + "', accumulated_entropy=" +
               format_double(r.accumulated_entropy) + ")";
      });

  py::class_<PumpLink>(m, "PumpLink")
      .def(py::init<>())
      .def_readwrite("source", &PumpLink::source)
      .def_readwrite("sink", &PumpLink::sink)
      .def_readwrite("quantum", &PumpLink::quantum)
      .def_readwrite("noise_sigma", &PumpLink::noise_sigma);

  py::class_<ThermoGateConfig>(m, "ThermoGateConfig")
      .def(py::init<>())
      .def_readwrite("reservoirs", &ThermoGateConfig::reservoirs)
      .def_readwrite("pumps", &ThermoGateConfig::pumps)
      .def_readwrite("n_steps", &ThermoGateConfig::n_steps)
      .def_readwrite("quantum", &ThermoGateConfig::quantum)
      .def_readwrite("noise_sigma", &ThermoGateConfig::noise_sigma)
      .def_readwrite("floor", &ThermoGateConfig::floor)
      .def_readwrite("seed", &ThermoGateConfig::seed)
      .def("max_gain", &ThermoGateConfig::max_gain)
      .def("resolved_floor", &ThermoGateConfig::resolved_floor)
      .def("validate", &ThermoGateConfig::validate);

  py::class_<ThermoTrialResult>(m, "ThermoTrialResult")
      .def_readonly("u", &ThermoTrialResult::u)
      .def_readonly("output", &ThermoTrialResult::output)
      .def_readonly("reservoirs", &ThermoTrialResult::reservoirs);

  py::class_<ThermoPairStats>(m, "ThermoPairStats")
      .def_readonly("a", &ThermoPairStats::a)
      .def_readonly("b", &ThermoPairStats::b)
      .def_readonly("trials", &ThermoPairStats::trials)
      .def_readonly("correct", &ThermoPairStats::correct)
      .def_readonly("accuracy", &ThermoPairStats::accuracy)
      .def_readonly("mean_u", &ThermoPairStats::mean_u)
      .def_readonly("std_u", &ThermoPairStats::std_u);

  py::class_<ThermoReport>(m, "ThermoReport")
      .def_readonly("pairs", &ThermoReport::pairs);

  m.def("default_thermo_config", &default_thermo_config);
  m.def("thermo_config_from_json", &thermo_config_from_json, py::arg("text"));
  m.def("load_thermo_config", &load_thermo_config, py::arg("path"));
  m.def("run_gate_trial", &run_gate_trial, py::arg("a"), py::arg("b"), py::arg("config"),
        py::arg("seed"));
  m.def("run_monte_carlo", &run_monte_carlo, py::arg("config"), py::arg("trials"),
        py::arg("seed"), py::call_guard<py::gil_scoped_release>());
  m.def("monte_carlo_csv", &monte_carlo_csv, py::arg("report"));
}
