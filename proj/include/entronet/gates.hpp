#pragma once

#include <array>
#include <set>
#include <string>

#include "entronet/core.hpp"

// Two-input logic gates realised as observation networks.
//
// The gate holds three elements: inputs `a` and `b` and an output `o`.
// Encoding an input wires one observation: a false input observes `o`
// (arrow input -> o), a true input is observed by `o` (arrow o -> input).
// After both inputs are wired, `o` carries 0, 1 or 2 splits, which is
// normalised to u = splits / normalization_max in [0, 1]. A gate fires
// (reads true) when u lies BELOW its threshold: with the default
// normalisation u takes {0, 0.5, 1}, so the NAND threshold 0.75 cuts off
// only the both-true case and the NOR threshold 0.25 admits only the
// both-false case. NAND and NOR differ by the threshold alone.

namespace entronet {

enum class GateKind { nand, nor };

std::string gate_kind_name(GateKind kind);

struct GateReadout {
  double normalization_max = 2.0;  // output splits that map to u == 1
  double nand_threshold = 0.75;    // must lie in (0.5, 1]
  double nor_threshold = 0.25;     // must lie in (0, 0.5]
};

// Full record of one gate evaluation.
struct GateState {
  bool a = false;
  bool b = false;
  GateKind kind = GateKind::nand;
  ObservationNetwork network;
  int a_splits = 0;
  int b_splits = 0;
  int o_splits = 0;
  double u = 0.0;
  bool output = false;
};

// The three-element network encoding inputs (a, b), at the given model
// temperature. Edge order: a's observation first, then b's.
ObservationNetwork build_gate_network(bool a, bool b, double temperature = 1.0);

// Split counts of (a, b, o). Throws std::invalid_argument unless the
// network's elements are exactly {a, b, o}.
std::array<int, 3> gate_entropies(const ObservationNetwork& net);

// u = o_splits / normalization_max, clamped to [0, 1].
double normalized_output(int o_splits, const GateReadout& readout);

// True iff u < the kind's threshold. Throws std::domain_error for u outside
// [0, 1] and std::invalid_argument for thresholds outside their ranges.
bool read_gate(double u, GateKind kind, const GateReadout& readout);

GateState evaluate_gate(bool a, bool b, GateKind kind, const GateReadout& readout = {});

// Exhaustive reachability search over this gate family: every wiring scheme
// on at most `max_elements` elements spending exactly `n_observations`
// observations, read through every below-threshold cut. A scheme gives each
// wired input a dedicated element and partner (wired exactly like the gate
// above), spends the remaining observations on fixed input-independent
// edges, and is admitted only if all four input assignments produce simple
// graphs. Returns the set of reachable two-input truth tables encoded as
// 4-bit masks (bit index a*2 + b). n_observations must lie in [1, 3] and
// max_elements in [2, 6].
std::set<unsigned> search_reachable_tables(int n_observations, int max_elements);

// Human name of a 4-bit truth-table mask ("NAND", "XOR", "A_IMPLIES_B", ...).
std::string truth_table_name(unsigned mask);

// Mask of the ideal table for a gate kind (NAND = 7, NOR = 1).
unsigned truth_table_of(GateKind kind);

}  // namespace entronet
