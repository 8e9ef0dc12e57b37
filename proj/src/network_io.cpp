#include "entronet/network_io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace entronet {

namespace {

using nlohmann::json;

json element_to_json(const Element& e) {
  json j;
  j["id"] = e.id;
  j["role"] = role_name(e.role);
  return j;
}

json edge_to_json(const ObservationEdge& e) {
  json j;
  j["observer"] = e.observer;
  j["observed"] = e.observed;
  j["order"] = e.order;
  return j;
}

[[noreturn]] void bad_document(const std::string& why) {
  throw std::invalid_argument("invalid network document: " + why);
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  for (int precision : {15, 16, 17}) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::string network_to_json(const ObservationNetwork& net) {
  json j;
  j["temperature"] = net.temperature();
  j["elements"] = json::array();
  for (const Element& e : net.elements()) j["elements"].push_back(element_to_json(e));
  std::vector<ObservationEdge> edges = net.edges();
  std::sort(edges.begin(), edges.end(),
            [](const ObservationEdge& a, const ObservationEdge& b) { return a.order < b.order; });
  j["edges"] = json::array();
  for (const ObservationEdge& e : edges) j["edges"].push_back(edge_to_json(e));
  return j.dump(2) + "\n";
}

ObservationNetwork network_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad_document(e.what());
  }
  if (!j.is_object()) bad_document("top level must be an object");

  double temperature = 1.0;
  if (j.contains("temperature")) {
    if (!j["temperature"].is_number()) bad_document("temperature must be a number");
    temperature = j["temperature"].get<double>();
    if (!(temperature > 0.0)) bad_document("temperature must be positive");
  }

  ObservationNetwork net(temperature);

  if (!j.contains("elements") || !j["elements"].is_array())
    bad_document("missing elements array");
  for (const json& je : j["elements"]) {
    if (!je.is_object() || !je.contains("id") || !je["id"].is_string())
      bad_document("each element needs a string id");
    Role role = Role::plain;
    if (je.contains("role")) {
      if (!je["role"].is_string()) bad_document("element role must be a string");
      try {
        role = role_from_name(je["role"].get<std::string>());
      } catch (const std::invalid_argument& e) {
        bad_document(e.what());
      }
    }
    try {
      net = net.with_element(je["id"].get<std::string>(), role);
    } catch (const std::invalid_argument& e) {
      bad_document(e.what());
    }
  }

  std::vector<ObservationEdge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) bad_document("edges must be an array");
    for (const json& je : j["edges"]) {
      if (!je.is_object() || !je.contains("observer") || !je["observer"].is_string() ||
          !je.contains("observed") || !je["observed"].is_string())
        bad_document("each edge needs observer and observed strings");
      ObservationEdge edge;
      edge.observer = je["observer"].get<std::string>();
      edge.observed = je["observed"].get<std::string>();
      if (je.contains("order")) {
        if (!je["order"].is_number_integer()) bad_document("edge order must be an integer");
        edge.order = je["order"].get<int>();
        if (edge.order < 0) bad_document("edge order must be non-negative");
      } else {
        edge.order = static_cast<int>(edges.size());
      }
      edges.push_back(edge);
    }
  }

  std::set<int> orders;
  for (const ObservationEdge& e : edges)
    if (!orders.insert(e.order).second)
      bad_document("duplicate edge order " + std::to_string(e.order));

  // Replay in event order through the normal path so the loaded network
  // carries the same ledger it would have accumulated live.
  std::sort(edges.begin(), edges.end(),
            [](const ObservationEdge& a, const ObservationEdge& b) { return a.order < b.order; });
  for (const ObservationEdge& e : edges) {
    try {
      net = observe_with_order(net, e.observer, e.observed, e.order);
    } catch (const std::invalid_argument& e2) {
      bad_document(e2.what());
    }
  }
  return net;
}

ObservationNetwork load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open network file: '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return network_from_json(buf.str());
}

void save_network(const ObservationNetwork& net, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write network file: '" + path + "'");
  out << network_to_json(net);
  if (!out) throw std::invalid_argument("failed while writing '" + path + "'");
}

std::string ledger_to_csv(const ObservationNetwork& net) {
  const double t = net.temperature();
  std::ostringstream out;
  out << "order,observer,observed,delta_model_nats,delta_physical_nats,env_absorbed\n";
  for (const LedgerStep& step : net.ledger().steps()) {
    out << step.order << ',' << step.observer << ',' << step.observed << ','
        << format_double(splits_to_model_nats(step.delta_splits, t)) << ','
        << format_double(splits_to_physical_nats(step.delta_splits, t)) << ','
        << format_double(splits_to_physical_nats(step.env_absorbed_after, t)) << '\n';
  }
  return out.str();
}

}  // namespace entronet
