#include "entronet/patterns.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace entronet {

namespace {

constexpr int kMaxLabelVertices = 8;  // 8^2 = 64 adjacency bits fit a uint64

// Adjacency mask with the bit for arc i->j placed at position
// v*v - 1 - (i*v + j), so that unsigned comparison of masks equals
// lexicographic comparison of the row-major bit strings.
uint64_t arcs_to_mask(int v, const std::vector<std::pair<int, int>>& arcs,
                      const std::vector<int>& perm) {
  uint64_t mask = 0;
  for (const auto& [i, j] : arcs)
    mask |= uint64_t{1} << (v * v - 1 - (perm[i] * v + perm[j]));
  return mask;
}

uint64_t minimal_mask(int v, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<int> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t best = ~uint64_t{0};
  do {
    best = std::min(best, arcs_to_mask(v, arcs, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string mask_to_label(int v, uint64_t mask) {
  std::string label = std::to_string(v) + ":";
  for (int pos = 0; pos < v * v; ++pos)
    label += (mask >> (v * v - 1 - pos)) & 1 ? '1' : '0';
  return label;
}

std::string label_arcs(int v, const std::vector<std::pair<int, int>>& arcs) {
  if (v == 0) return "0:";
  return mask_to_label(v, minimal_mask(v, arcs));
}

std::vector<std::pair<int, int>> indexed_arcs(const ObservationNetwork& net) {
  std::map<std::string, int> index;
  for (const Element& e : net.elements()) index.emplace(e.id, static_cast<int>(index.size()));
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(net.edges().size());
  for (const ObservationEdge& e : net.edges())
    arcs.emplace_back(index.at(e.observer), index.at(e.observed));
  return arcs;
}

// Representative builders for the named shapes, used to pin kind labels to
// canonical forms once instead of hand-maintaining label strings.
ObservationNetwork build_reference(PatternKind kind) {
  ObservationNetwork net(1.0);
  switch (kind) {
    case PatternKind::single:
      net = net.with_element("a").with_element("b");
      return observe(net, "a", "b");
    case PatternKind::loop:
      net = net.with_element("a").with_element("b");
      return observe(observe(net, "a", "b"), "b", "a");
    case PatternKind::e_out:
      net = net.with_element("a").with_element("b").with_element("c");
      return observe(observe(net, "a", "c"), "b", "c");
    case PatternKind::s_in:
      net = net.with_element("a").with_element("b").with_element("c");
      return observe(observe(net, "a", "b"), "a", "c");
    case PatternKind::train:
      net = net.with_element("a").with_element("b").with_element("c");
      return observe(observe(net, "a", "b"), "b", "c");
    case PatternKind::other: break;
  }
  throw std::logic_error("no reference network for this pattern kind");
}

const std::map<std::string, PatternKind>& kind_by_label() {
  static const std::map<std::string, PatternKind> table = [] {
    std::map<std::string, PatternKind> t;
    for (PatternKind kind : {PatternKind::single, PatternKind::loop, PatternKind::e_out,
                             PatternKind::s_in, PatternKind::train})
      t.emplace(canonical_form(build_reference(kind)), kind);
    return t;
  }();
  return table;
}

bool covers_all_vertices(int v, uint64_t arc_bits) {
  // arc_bits has bit (i*v + j) set per arc, plain row-major encoding.
  uint64_t seen = 0;
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j)
      if (arc_bits & (uint64_t{1} << (i * v + j))) seen |= (uint64_t{1} << i) | (uint64_t{1} << j);
  return seen == (uint64_t{1} << v) - 1;
}

bool weakly_connected(int v, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<int> parent(v);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = v;
  for (const auto& [i, j] : arcs) {
    int a = find(i), b = find(j);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::string quoted(const std::string& id) {
  std::string out = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string pattern_kind_name(PatternKind kind) {
  switch (kind) {
    case PatternKind::single: return "single";
    case PatternKind::loop: return "loop";
    case PatternKind::e_out: return "e_out";
    case PatternKind::s_in: return "s_in";
    case PatternKind::train: return "train";
    case PatternKind::other: return "other";
  }
  throw std::logic_error("unhandled PatternKind value");
}

std::string canonical_form(const ObservationNetwork& net) {
  const int v = static_cast<int>(net.elements().size());
  if (v > kMaxLabelVertices)
    throw std::invalid_argument("canonical_form supports at most " +
                                std::to_string(kMaxLabelVertices) + " elements");
  return label_arcs(v, indexed_arcs(net));
}

bool are_isomorphic(const ObservationNetwork& a, const ObservationNetwork& b) {
  return canonical_form(a) == canonical_form(b);
}

PatternClass classify_pattern(const ObservationNetwork& net) {
  PatternClass out;
  out.canonical_label = canonical_form(net);
  const auto& table = kind_by_label();
  auto it = table.find(out.canonical_label);
  out.kind = it == table.end() ? PatternKind::other : it->second;
  return out;
}

std::map<std::string, ObservationNetwork> enumerate_patterns(int n) {
  if (n < 1 || n > 5)
    throw std::invalid_argument("pattern enumeration supports 1 to 5 observations");

  std::map<std::string, ObservationNetwork> result;

  // n arcs touch at most 2n vertices, but a connected n-arc digraph has at
  // most n+1; every shape appears already at its minimal vertex count.
  for (int v = 2; v <= n + 1; ++v) {
    std::vector<std::pair<int, int>> all_arcs;
    for (int i = 0; i < v; ++i)
      for (int j = 0; j < v; ++j)
        if (i != j) all_arcs.emplace_back(i, j);
    const int m = static_cast<int>(all_arcs.size());
    if (m < n) continue;

    // Walk all n-subsets of the arc pool in lexicographic order.
    std::vector<int> pick(n);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<std::pair<int, int>> arcs;
      uint64_t arc_bits = 0;
      arcs.reserve(n);
      for (int idx : pick) {
        arcs.push_back(all_arcs[idx]);
        arc_bits |= uint64_t{1} << (all_arcs[idx].first * v + all_arcs[idx].second);
      }
      if (covers_all_vertices(v, arc_bits) && weakly_connected(v, arcs)) {
        std::string label = label_arcs(v, arcs);
        if (!result.contains(label)) {
          ObservationNetwork net(1.0);
          for (int i = 0; i < v; ++i) net = net.with_element("v" + std::to_string(i));
          for (const auto& [i, j] : arcs)
            net = observe(net, "v" + std::to_string(i), "v" + std::to_string(j));
          result.emplace(std::move(label), std::move(net));
        }
      }

      // Advance the combination; stop after the last one.
      int k = n - 1;
      while (k >= 0 && pick[k] == m - n + k) --k;
      if (k < 0) break;
      ++pick[k];
      for (int t = k + 1; t < n; ++t) pick[t] = pick[t - 1] + 1;
    }
  }
  return result;
}

std::string to_dot(const ObservationNetwork& net, const std::string& graph_label) {
  std::ostringstream out;
  out << "digraph observation_network {\n";
  if (!graph_label.empty()) out << "  label=" << quoted(graph_label) << ";\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  for (const Element& e : net.elements()) {
    out << "  " << quoted(e.id);
    switch (e.role) {
      case Role::output: out << " [shape=doublecircle]"; break;
      case Role::environment: out << " [shape=box]"; break;
      case Role::plain:
      case Role::input: break;
    }
    out << ";\n";
  }
  std::vector<ObservationEdge> edges = net.edges();
  std::sort(edges.begin(), edges.end(),
            [](const ObservationEdge& a, const ObservationEdge& b) { return a.order < b.order; });
  for (const ObservationEdge& e : edges)
    out << "  " << quoted(e.observer) << " -> " << quoted(e.observed) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace entronet
