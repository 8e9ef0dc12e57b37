#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "entronet/core.hpp"
#include "entronet/patterns.hpp"

using namespace entronet;

namespace {

// Small helper: network over elements e0..e(k-1) with the given arcs.
ObservationNetwork make_net(int k, const std::vector<std::pair<std::string, std::string>>& arcs) {
  ObservationNetwork net(1.0);
  for (int i = 0; i < k; ++i) net = net.with_element("e" + std::to_string(i));
  for (const auto& [from, to] : arcs) net = observe(net, from, to);
  return net;
}

}  // namespace

TEST_CASE("canonical_form ignores labels, roles and event order") {
  const auto train1 = make_net(3, {{"e0", "e1"}, {"e1", "e2"}});
  const auto train2 = make_net(3, {{"e2", "e0"}, {"e1", "e2"}});  // same shape, permuted
  CHECK(canonical_form(train1) == canonical_form(train2));
  CHECK(are_isomorphic(train1, train2));

  ObservationNetwork roles(5.0);
  roles = roles.with_element("x", Role::output).with_element("y", Role::input).with_element("z");
  roles = observe(roles, "y", "x");
  roles = observe(roles, "x", "z");
  CHECK(are_isomorphic(roles, train1));

  const auto s_in = make_net(3, {{"e0", "e1"}, {"e0", "e2"}});
  CHECK_FALSE(are_isomorphic(train1, s_in));
  CHECK(canonical_form(train1) != canonical_form(s_in));
}

TEST_CASE("canonical_form separates orientation, not just the skeleton") {
  const auto e_out = make_net(3, {{"e0", "e2"}, {"e1", "e2"}});
  const auto s_in = make_net(3, {{"e0", "e1"}, {"e0", "e2"}});
  const auto train = make_net(3, {{"e0", "e1"}, {"e1", "e2"}});
  CHECK(canonical_form(e_out) != canonical_form(s_in));
  CHECK(canonical_form(e_out) != canonical_form(train));
  CHECK(canonical_form(s_in) != canonical_form(train));
}

TEST_CASE("canonical_form has a fixed printable shape") {
  const auto single = make_net(2, {{"e0", "e1"}});
  const std::string label = canonical_form(single);
  CHECK(label == "2:0010");  // minimal adjacency bit string over 2 vertices
  CHECK(canonical_form(make_net(2, {{"e1", "e0"}})) == label);

  // Vertex-count cap: 64 adjacency bits.
  ObservationNetwork big(1.0);
  for (int i = 0; i < 9; ++i) big = big.with_element("n" + std::to_string(i));
  CHECK_THROWS_AS(canonical_form(big), std::invalid_argument);
}

TEST_CASE("classify_pattern names the one- and two-observation taxonomy") {
  CHECK(classify_pattern(make_net(2, {{"e0", "e1"}})).kind == PatternKind::single);
  CHECK(classify_pattern(make_net(2, {{"e0", "e1"}, {"e1", "e0"}})).kind == PatternKind::loop);
  CHECK(classify_pattern(make_net(3, {{"e0", "e2"}, {"e1", "e2"}})).kind == PatternKind::e_out);
  CHECK(classify_pattern(make_net(3, {{"e0", "e1"}, {"e0", "e2"}})).kind == PatternKind::s_in);
  CHECK(classify_pattern(make_net(3, {{"e0", "e1"}, {"e1", "e2"}})).kind == PatternKind::train);
  // Outside the taxonomy: a three-cycle.
  const auto cycle = make_net(3, {{"e0", "e1"}, {"e1", "e2"}, {"e2", "e0"}});
  const PatternClass cls = classify_pattern(cycle);
  CHECK(cls.kind == PatternKind::other);
  CHECK_FALSE(cls.canonical_label.empty());
}

TEST_CASE("pattern kind names are stable") {
  CHECK(pattern_kind_name(PatternKind::single) == "single");
  CHECK(pattern_kind_name(PatternKind::loop) == "loop");
  CHECK(pattern_kind_name(PatternKind::e_out) == "e_out");
  CHECK(pattern_kind_name(PatternKind::s_in) == "s_in");
  CHECK(pattern_kind_name(PatternKind::train) == "train");
  CHECK(pattern_kind_name(PatternKind::other) == "other");
}

TEST_CASE("enumerate_patterns reproduces the frozen class counts") {
  // 1, 4, 12, 53, 237: verified against two independent enumeration routes.
  CHECK(enumerate_patterns(1).size() == 1);
  CHECK(enumerate_patterns(2).size() == 4);
  CHECK(enumerate_patterns(3).size() == 12);
  CHECK(enumerate_patterns(4).size() == 53);
  CHECK(enumerate_patterns(5).size() == 237);
  CHECK_THROWS_AS(enumerate_patterns(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_patterns(6), std::invalid_argument);
}

TEST_CASE("enumerate_patterns(2) yields exactly the named four") {
  const auto patterns = enumerate_patterns(2);
  std::set<PatternKind> kinds;
  for (const auto& [label, net] : patterns) {
    const PatternClass cls = classify_pattern(net);
    CHECK(cls.canonical_label == label);  // keys are the canonical labels
    kinds.insert(cls.kind);
  }
  CHECK(kinds == std::set<PatternKind>{PatternKind::loop, PatternKind::e_out, PatternKind::s_in,
                                       PatternKind::train});
}

TEST_CASE("enumerate_patterns representatives are tight") {
  for (int n : {1, 2, 3}) {
    for (const auto& [label, net] : enumerate_patterns(n)) {
      CHECK(net.edges().size() == static_cast<std::size_t>(n));
      CHECK(net.elements().size() <= static_cast<std::size_t>(n) + 1);
      for (const Element& e : net.elements()) {
        bool touched = false;
        for (const ObservationEdge& edge : net.edges())
          touched |= edge.observer == e.id || edge.observed == e.id;
        CHECK(touched);  // no isolated elements
      }
      CHECK(canonical_form(net) == label);
    }
  }
}

TEST_CASE("dot export names the graph and draws one arrow per observation") {
  ObservationNetwork net(1.0);
  net = net.with_element("a", Role::input).with_element("o", Role::output);
  net = observe(net, "a", "o");
  const std::string dot = to_dot(net, "single");
  CHECK(dot.find("digraph observation_network {") != std::string::npos);
  CHECK(dot.find("label=\"single\";") != std::string::npos);
  CHECK(dot.find("\"a\" -> \"o\";") != std::string::npos);
  CHECK(dot.find("\"o\" [shape=doublecircle];") != std::string::npos);
  CHECK(to_dot(net).find("label=") == std::string::npos);
}
