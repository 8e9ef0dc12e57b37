#pragma once

#include <map>
#include <string>
#include <vector>

#include "entronet/core.hpp"

// Structural taxonomy of small observation networks.
//
// Two networks have the same shape when a relabelling of elements maps one
// edge set onto the other; split counts and roles are derived or decorative
// and do not enter the comparison. Shapes are named by a canonical label:
// the lexicographically smallest row-major adjacency bit string over all
// vertex permutations, prefixed with the vertex count ("3:010001000").
// Exhaustive minimisation is exact but factorial, so labelling is capped at
// 8 elements — plenty for the two-observation taxonomy and the enumerator.

namespace entronet {

enum class PatternKind {
  single,  // n=1: one element observes another
  loop,    // a observes b, b observes a
  e_out,   // two observers share one observed element  (two arrows leaving it)
  s_in,    // one observer takes in two elements        (two arrows entering it)
  train,   // a observes b while b observes c
  other,   // anything outside the n<=2 taxonomy
};

std::string pattern_kind_name(PatternKind kind);

struct PatternClass {
  PatternKind kind = PatternKind::other;
  std::string canonical_label;
};

// Canonical label of the network's shape. Equal labels <=> isomorphic.
// Throws std::invalid_argument for networks with more than 8 elements.
std::string canonical_form(const ObservationNetwork& net);

bool are_isomorphic(const ObservationNetwork& a, const ObservationNetwork& b);

// Name the shape within the n<=2 taxonomy (kind `other` outside it);
// the canonical label is always filled in.
PatternClass classify_pattern(const ObservationNetwork& net);

// All distinct shapes with exactly n observation events and no isolated
// element, one representative each, keyed and ordered by canonical label.
// n must lie in [1, 5]; counts grow quickly (1, 4, 12, 53, 237).
std::map<std::string, ObservationNetwork> enumerate_patterns(int n);

// Graphviz rendering. Arrows point observer -> observed; input elements are
// drawn as plain circles, outputs as double circles, environment as boxes.
std::string to_dot(const ObservationNetwork& net, const std::string& graph_label = "");

}  // namespace entronet
