#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "entronet/core.hpp"
#include "entronet/network_io.hpp"

using namespace entronet;

namespace {

ObservationNetwork sample_network() {
  ObservationNetwork net(300.0);
  net = net.with_element("a", Role::input)
            .with_element("b", Role::input)
            .with_element("o", Role::output);
  net = observe(net, "a", "o");
  net = observe(net, "o", "b");
  return net;
}

}  // namespace

TEST_CASE("format_double prints the shortest round-trippable decimal") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.0) == "0");
  for (double v : {std::numbers::ln2_v<double>, 2.8709788850787238e-21, 1.0 / 3.0, 0.1})
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
}

TEST_CASE("network json round-trips exactly") {
  const ObservationNetwork net = sample_network();
  const std::string text = network_to_json(net);
  const ObservationNetwork back = network_from_json(text);

  CHECK(back.temperature() == net.temperature());
  REQUIRE(back.elements().size() == net.elements().size());
  for (std::size_t i = 0; i < net.elements().size(); ++i) {
    CHECK(back.elements()[i].id == net.elements()[i].id);
    CHECK(back.elements()[i].role == net.elements()[i].role);
    CHECK(back.elements()[i].splits == net.elements()[i].splits);
  }
  REQUIRE(back.edges().size() == net.edges().size());
  for (std::size_t i = 0; i < net.edges().size(); ++i) {
    CHECK(back.edges()[i].observer == net.edges()[i].observer);
    CHECK(back.edges()[i].observed == net.edges()[i].observed);
    CHECK(back.edges()[i].order == net.edges()[i].order);
  }
  CHECK(back.ledger().reconciles());
  CHECK(network_to_json(back) == text);
}

TEST_CASE("network json keeps sparse event orders") {
  ObservationNetwork net(1.0);
  net = net.with_element("a").with_element("b").with_element("c");
  net = observe_with_order(net, "a", "b", 2);
  net = observe_with_order(net, "b", "c", 7);
  const ObservationNetwork back = network_from_json(network_to_json(net));
  CHECK(back.edges()[0].order == 2);
  CHECK(back.edges()[1].order == 7);
  CHECK(network_to_json(back) == network_to_json(net));
}

TEST_CASE("malformed network documents are rejected with context") {
  CHECK_THROWS_AS(network_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(network_from_json("[]"), std::invalid_argument);
  CHECK_THROWS_AS(network_from_json("{}"), std::invalid_argument);  // no elements
  CHECK_THROWS_AS(network_from_json(R"({"temperature": -3, "elements": []})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(network_from_json(R"({"elements": [{"id": "a"}, {"id": "a"}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(network_from_json(R"({"elements": [{"id": "a", "role": "widget"}]})"),
                  std::invalid_argument);
  // self observation
  CHECK_THROWS_AS(network_from_json(R"({"elements": [{"id": "a"}],
    "edges": [{"observer": "a", "observed": "a", "order": 0}]})"),
                  std::invalid_argument);
  // duplicate order
  CHECK_THROWS_AS(network_from_json(R"({"elements": [{"id": "a"}, {"id": "b"}],
    "edges": [{"observer": "a", "observed": "b", "order": 1},
              {"observer": "b", "observed": "a", "order": 1}]})"),
                  std::invalid_argument);
  // unknown endpoint
  CHECK_THROWS_AS(network_from_json(R"({"elements": [{"id": "a"}],
    "edges": [{"observer": "a", "observed": "zz", "order": 0}]})"),
                  std::invalid_argument);
}

TEST_CASE("loading accepts edges listed out of order") {
  const ObservationNetwork net = network_from_json(R"({
    "temperature": 1.0,
    "elements": [{"id": "a"}, {"id": "b"}, {"id": "c"}],
    "edges": [{"observer": "b", "observed": "c", "order": 1},
              {"observer": "a", "observed": "b", "order": 0}]
  })");
  REQUIRE(net.edges().size() == 2);
  CHECK(net.edges()[0].observer == "a");  // replayed sorted by order
  CHECK(net.edges()[1].observer == "b");
  CHECK(net.ledger().reconciles());
}

TEST_CASE("ledger csv carries both unit systems and the running env total") {
  ObservationNetwork net(2.0);
  net = net.with_element("a").with_element("b");
  net = observe(net, "a", "b");
  net = dissipate_to_environment(net, "a", DissipationMode::erase);

  const std::string csv = ledger_to_csv(net);
  std::istringstream lines(csv);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "order,observer,observed,delta_model_nats,delta_physical_nats,env_absorbed");

  REQUIRE(std::getline(lines, line));  // the observation, T = 2
  CHECK(line.rfind("0,a,b,2,", 0) == 0);
  const double physical = std::strtod(line.substr(8).c_str(), nullptr);
  CHECK(physical == doctest::Approx(2.0 * std::numbers::ln2_v<double>).epsilon(1e-15));
  CHECK(line.substr(line.rfind(',') + 1) == "0");

  REQUIRE(std::getline(lines, line));  // the dissipation
  CHECK(line.rfind("1,env,a,2,", 0) == 0);
  const std::string env_field = line.substr(line.rfind(',') + 1);
  CHECK(std::strtod(env_field.c_str(), nullptr) ==
        doctest::Approx(2.0 * std::numbers::ln2_v<double>).epsilon(1e-15));
  CHECK_FALSE(std::getline(lines, line));
}

TEST_CASE("save and load go through the filesystem") {
  const auto path =
      (std::filesystem::temp_directory_path() / "entronet_io_test_network.json").string();
  const ObservationNetwork net = sample_network();
  save_network(net, path);
  const ObservationNetwork back = load_network(path);
  CHECK(network_to_json(back) == network_to_json(net));
  std::filesystem::remove(path);

  CHECK_THROWS_AS(load_network("/nonexistent/dir/net.json"), std::invalid_argument);
  CHECK_THROWS_AS(save_network(net, "/nonexistent/dir/net.json"), std::invalid_argument);
}
