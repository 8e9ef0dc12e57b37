#include "entronet/gates.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace entronet {

namespace {

void check_readout(const GateReadout& readout) {
  if (!(readout.normalization_max > 0.0))
    throw std::invalid_argument("normalization_max must be positive");
  if (!(readout.nand_threshold > 0.5 && readout.nand_threshold <= 1.0))
    throw std::invalid_argument("nand_threshold must lie in (0.5, 1]");
  if (!(readout.nor_threshold > 0.0 && readout.nor_threshold <= 0.5))
    throw std::invalid_argument("nor_threshold must lie in (0, 0.5]");
}

// One observation, direction chosen by the input value: false means the
// input element observes the partner, true the other way round.
std::pair<int, int> wired_edge(int input_element, int partner, bool value) {
  return value ? std::pair{partner, input_element} : std::pair{input_element, partner};
}

}  // namespace

std::string gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::nand: return "nand";
    case GateKind::nor: return "nor";
  }
  throw std::logic_error("unhandled GateKind value");
}

ObservationNetwork build_gate_network(bool a, bool b, double temperature) {
  ObservationNetwork net(temperature);
  net = net.with_element("a", Role::input)
            .with_element("b", Role::input)
            .with_element("o", Role::output);
  net = a ? observe(net, "o", "a") : observe(net, "a", "o");
  net = b ? observe(net, "o", "b") : observe(net, "b", "o");
  return net;
}

std::array<int, 3> gate_entropies(const ObservationNetwork& net) {
  if (net.elements().size() != 3 || !net.has_element("a") || !net.has_element("b") ||
      !net.has_element("o"))
    throw std::invalid_argument("gate network must hold exactly the elements a, b and o");
  return {net.element("a").splits, net.element("b").splits, net.element("o").splits};
}

double normalized_output(int o_splits, const GateReadout& readout) {
  check_readout(readout);
  if (o_splits < 0) throw std::invalid_argument("split count must be non-negative");
  return std::clamp(o_splits / readout.normalization_max, 0.0, 1.0);
}

bool read_gate(double u, GateKind kind, const GateReadout& readout) {
  check_readout(readout);
  if (!(u >= 0.0 && u <= 1.0))
    throw std::domain_error("normalized output must lie in [0, 1]");
  const double threshold =
      kind == GateKind::nand ? readout.nand_threshold : readout.nor_threshold;
  return u < threshold;
}

GateState evaluate_gate(bool a, bool b, GateKind kind, const GateReadout& readout) {
  GateState state;
  state.a = a;
  state.b = b;
  state.kind = kind;
  state.network = build_gate_network(a, b);
  const auto [sa, sb, so] = gate_entropies(state.network);
  state.a_splits = sa;
  state.b_splits = sb;
  state.o_splits = so;
  state.u = normalized_output(so, readout);
  state.output = read_gate(state.u, kind, readout);
  return state;
}

unsigned truth_table_of(GateKind kind) {
  // Bit index a*2 + b; NAND is false only at (1,1), NOR true only at (0,0).
  return kind == GateKind::nand ? 0b0111u : 0b0001u;
}

std::string truth_table_name(unsigned mask) {
  static const char* names[16] = {
      "FALSE", "NOR",  "B_ANDNOT_A", "NOT_A", "A_ANDNOT_B", "NOT_B",       "XOR", "NAND",
      "AND",   "XNOR", "B",          "A_IMPLIES_B", "A",     "B_IMPLIES_A", "OR",  "TRUE"};
  if (mask > 15) throw std::invalid_argument("truth-table mask must lie in [0, 15]");
  return names[mask];
}

std::set<unsigned> search_reachable_tables(int n_observations, int max_elements) {
  if (n_observations < 1 || n_observations > 3)
    throw std::invalid_argument("observation budget must lie in [1, 3]");
  if (max_elements < 2 || max_elements > 6)
    throw std::invalid_argument("element budget must lie in [2, 6]");

  std::set<unsigned> reachable;

  // Schemes on fewer elements are schemes here with isolated elements, so a
  // single pass over the full budget covers every smaller network too.
  using Edge = std::pair<int, int>;
  {
    const int v = max_elements;
    std::vector<Edge> all_edges;
    for (int i = 0; i < v; ++i)
      for (int j = 0; j < v; ++j)
        if (i != j) all_edges.emplace_back(i, j);
    const int m = static_cast<int>(all_edges.size());

    // wired is a bitmask over the inputs {a, b}; unwired inputs simply do
    // not touch the network and the table is constant along their axis.
    for (int wired = 0; wired < 4; ++wired) {
      const bool wire_a = wired & 1, wire_b = wired & 2;
      const int fixed_count = n_observations - (wire_a ? 1 : 0) - (wire_b ? 1 : 0);
      if (fixed_count < 0) continue;

      // Dedicated input element + partner per wired input; -1 when unwired.
      for (int ea = wire_a ? 0 : -1; ea < (wire_a ? v : 0); ++ea)
        for (int pa = wire_a ? 0 : -1; pa < (wire_a ? v : 0); ++pa) {
          if (wire_a && pa == ea) continue;
          for (int eb = wire_b ? 0 : -1; eb < (wire_b ? v : 0); ++eb) {
            if (wire_b && wire_a && eb == ea) continue;
            for (int pb = wire_b ? 0 : -1; pb < (wire_b ? v : 0); ++pb) {
              if (wire_b && pb == eb) continue;

              // Fixed input-independent edges: every size-fixed_count subset.
              std::vector<int> pick(fixed_count);
              for (int i = 0; i < fixed_count; ++i) pick[i] = i;
              bool more = fixed_count <= m;
              while (more) {
                std::vector<Edge> fixed;
                fixed.reserve(fixed_count);
                for (int idx : pick) fixed.push_back(all_edges[idx]);

                // The scheme stands only if each of the four assignments
                // yields exactly n distinct edges (the graph stays simple).
                bool valid = true;
                std::array<std::vector<int>, 4> out_degree;
                for (int assign = 0; assign < 4 && valid; ++assign) {
                  const bool av = assign & 2, bv = assign & 1;
                  std::vector<Edge> edges = fixed;
                  if (wire_a) edges.push_back(wired_edge(ea, pa, av));
                  if (wire_b) edges.push_back(wired_edge(eb, pb, bv));
                  std::sort(edges.begin(), edges.end());
                  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
                    valid = false;
                    break;
                  }
                  out_degree[assign].assign(v, 0);
                  for (const Edge& e : edges) ++out_degree[assign][e.first];
                }

                if (valid) {
                  for (int out = 0; out < v; ++out) {
                    // Below-threshold readout: true iff splits < cut. Cuts
                    // beyond n+1 and below 1 add only the constant tables,
                    // which the loop endpoints already produce.
                    for (int cut = 0; cut <= n_observations + 1; ++cut) {
                      unsigned mask = 0;
                      for (int assign = 0; assign < 4; ++assign)
                        if (out_degree[assign][out] < cut) mask |= 1u << assign;
                      reachable.insert(mask);
                    }
                  }
                }

                // Next subset, lexicographic.
                int k = fixed_count - 1;
                while (k >= 0 && pick[k] == m - fixed_count + k) --k;
                if (k < 0) {
                  more = false;
                } else {
                  ++pick[k];
                  for (int t = k + 1; t < fixed_count; ++t) pick[t] = pick[t - 1] + 1;
                }
              }
            }
          }
        }
    }
  }
  return reachable;
}

}  // namespace entronet
