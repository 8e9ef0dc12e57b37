"""End-to-end smoke tests for the python bindings.

The heavy verification lives in the C++ suites; these check that the
bindings expose the main operations faithfully and that a handful of known
values survive the language crossing.
"""

import math

import pytest

import entronet as en


def test_entropy_conversions():
    assert en.landauer_energy(300.0) == pytest.approx(2.8709788850787238e-21, rel=1e-12)
    assert en.element_entropy(3, 2.0) == pytest.approx(3 * 2.0 * math.log(2.0), rel=1e-12)
    assert en.binary_entropy(0.5) == pytest.approx(math.log(2.0), rel=1e-12)
    assert en.transition_profile(0.5, en.TransitionMode.kronecker) == 1.0
    assert en.transition_profile(0.25, en.TransitionMode.kronecker) == 0.0


def test_network_operations_and_ledger():
    net = en.ObservationNetwork(1.0).with_element("a").with_element("b")
    net = net.observe("a", "b")
    assert net.element("a").splits == 1
    assert net.total_splits() == 1
    assert net.has_edge("a", "b") and not net.has_edge("b", "a")

    net = en.dissipate_to_environment(net, "a", en.DissipationMode.erase)
    assert net.element("a").splits == 0
    assert net.ledger.env_absorbed_splits == 1
    assert net.ledger.reconciles()

    with pytest.raises(ValueError):
        net.observe("a", "a")


def test_network_json_round_trip():
    net = en.ObservationNetwork(0.5).with_element("x", en.Role.input).with_element("y")
    net = net.observe("x", "y")
    doc = en.network_to_json(net)
    again = en.network_from_json(doc)
    assert en.network_to_json(again) == doc
    assert en.ledger_to_csv(again).startswith(
        "order,observer,observed,delta_model_nats,delta_physical_nats,env_absorbed"
    )


def test_pattern_census_and_classification():
    assert len(en.enumerate_patterns(1)) == 1
    assert len(en.enumerate_patterns(2)) == 4
    assert len(en.enumerate_patterns(3)) == 12

    net = en.ObservationNetwork().with_element("a").with_element("b")
    net = net.observe("a", "b")
    assert en.canonical_form(net) == "2:0010"
    assert en.classify_pattern(net).kind == en.PatternKind.single
    assert "digraph" in en.to_dot(net)


def test_gates_differ_by_threshold_alone():
    for a in (False, True):
        for b in (False, True):
            nand = en.evaluate_gate(a, b, en.GateKind.nand)
            nor = en.evaluate_gate(a, b, en.GateKind.nor)
            assert nand.output == (not (a and b))
            assert nor.output == (not (a or b))
            assert nand.u == nor.u  # same network, same readout value
    assert en.truth_table_of(en.GateKind.nand) == 7
    assert en.truth_table_name(7) == "NAND"


def test_reachability_search():
    tables = en.search_reachable_tables(2, 6)
    assert 7 in tables and 1 in tables  # NAND, NOR
    assert 6 not in tables and 9 not in tables  # XOR, XNOR need more observations


def test_synthesis_pipeline():
    expr = en.parse_expression("(a & b) | !c")
    assert en.expression_variables(expr) == ["a", "b", "c"]
    netlist = en.synthesize_nand_netlist(expr)

    for bits in range(8):
        assign = {"a": bool(bits & 4), "b": bool(bits & 2), "c": bool(bits & 1)}
        expected = (assign["a"] and assign["b"]) or not assign["c"]
        assert en.evaluate_netlist(netlist, assign, en.EvalMode.pure) == [expected]
        assert en.evaluate_netlist(netlist, assign, en.EvalMode.entropy) == [expected]

    text = en.netlist_to_text(netlist)
    assert en.netlist_to_text(en.netlist_from_text(text)) == text

    report = en.netlist_report(netlist, 300.0)
    assert report.gate_count == len(netlist.gates)
    assert report.budget_splits == 2 * report.gate_count

    with pytest.raises(en.ParseError, match="offset 3"):
        en.parse_expression("a &")


def test_thermo_anchors_and_reproducibility():
    config = en.default_thermo_config()
    assert en.run_gate_trial(False, False, config, 1).u == 0.0
    assert en.run_gate_trial(True, False, config, 1).u == 0.5
    assert en.run_gate_trial(True, True, config, 1).u == 1.0

    config.noise_sigma = 0.05
    for pump in config.pumps:
        pump.noise_sigma = 0.05
    first = en.run_monte_carlo(config, 50, 42)
    second = en.run_monte_carlo(config, 50, 42)
    assert en.monte_carlo_csv(first) == en.monte_carlo_csv(second)
    assert all(p.accuracy == 1.0 for p in first.pairs)


def test_thermo_config_json():
    config = en.thermo_config_from_json('{"n_steps": 4, "quantum": 2.0}')
    assert config.max_gain() == 4 * (2.0 + 2.0)
    with pytest.raises(ValueError):
        en.thermo_config_from_json('{"n_steps": 0}')
