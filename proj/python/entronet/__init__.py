"""Observation networks: directed entropy transfer as a computational substrate.

Thin re-export of the compiled extension. Everything lives in C++; this
package exists so `import entronet` works and the symbols are introspectable.
"""

from entronet._core import (  # noqa: F401
    # core
    K_BOLTZMANN,
    DissipationMode,
    Element,
    EntropyLedger,
    LedgerStep,
    ObservationEdge,
    ObservationNetwork,
    Role,
    TransitionMode,
    binary_entropy,
    dissipate_to_environment,
    element_entropy,
    landauer_energy,
    observe,
    observe_with_order,
    role_from_name,
    role_name,
    splits_to_model_nats,
    splits_to_physical_nats,
    transition_profile,
    # serialization
    format_double,
    ledger_to_csv,
    load_network,
    network_from_json,
    network_to_json,
    save_network,
    # patterns
    PatternClass,
    PatternKind,
    are_isomorphic,
    canonical_form,
    classify_pattern,
    enumerate_patterns,
    pattern_kind_name,
    to_dot,
    # gates
    GateKind,
    GateReadout,
    GateState,
    build_gate_network,
    evaluate_gate,
    gate_entropies,
    gate_kind_name,
    normalized_output,
    read_gate,
    search_reachable_tables,
    truth_table_name,
    truth_table_of,
    # circuits
    BoolExpr,
    EvalMode,
    ExprOp,
    NandGate,
    NandNetlist,
    NetRef,
    NetlistReport,
    ParseError,
    evaluate_expression,
    evaluate_netlist,
    expression_variables,
    load_netlist,
    netlist_from_text,
    netlist_report,
    netlist_to_dot,
    netlist_to_text,
    parse_expression,
    synthesize_nand_netlist,
    # thermo
    PumpLink,
    Reservoir,
    ThermoGateConfig,
    ThermoPairStats,
    ThermoReport,
    ThermoTrialResult,
    default_thermo_config,
    load_thermo_config,
    monte_carlo_csv,
    run_gate_trial,
    run_monte_carlo,
    thermo_config_from_json,
)

__version__ = "0.1.0"
