#include "entronet/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace entronet {

namespace {

constexpr double ln2 = std::numbers::ln2_v<double>;

// Reserved observer id for dissipation rows in the ledger.
const std::string kEnvObserver = "env";

}  // namespace

std::string role_name(Role role) {
  switch (role) {
    case Role::plain: return "plain";
    case Role::input: return "input";
    case Role::output: return "output";
    case Role::environment: return "environment";
  }
  throw std::logic_error("unhandled Role value");
}

Role role_from_name(const std::string& name) {
  if (name == "plain") return Role::plain;
  if (name == "input") return Role::input;
  if (name == "output") return Role::output;
  if (name == "environment") return Role::environment;
  throw std::invalid_argument("unknown role name: '" + name + "'");
}

int EntropyLedger::entry_splits(const std::string& id) const {
  auto it = entries_.find(id);
  return it == entries_.end() ? 0 : it->second;
}

int EntropyLedger::total_created_splits() const {
  int total = 0;
  for (const auto& step : steps_) total += step.created_splits;
  return total;
}

bool EntropyLedger::reconciles() const {
  int held = 0;
  for (const auto& [id, splits] : entries_) held += splits;
  return total_created_splits() == held + env_absorbed_;
}

ObservationNetwork::ObservationNetwork(double temperature) : temperature_(temperature) {
  if (!(temperature > 0.0))
    throw std::domain_error("temperature must be positive");
}

bool ObservationNetwork::has_element(const std::string& id) const {
  return std::any_of(elements_.begin(), elements_.end(),
                     [&](const Element& e) { return e.id == id; });
}

const Element& ObservationNetwork::element(const std::string& id) const {
  for (const Element& e : elements_)
    if (e.id == id) return e;
  throw std::invalid_argument("no such element: '" + id + "'");
}

bool ObservationNetwork::has_edge(const std::string& observer, const std::string& observed) const {
  return std::any_of(edges_.begin(), edges_.end(), [&](const ObservationEdge& e) {
    return e.observer == observer && e.observed == observed;
  });
}

ObservationNetwork ObservationNetwork::with_auto_dissipate(bool on) const {
  ObservationNetwork out = *this;
  out.auto_dissipate_ = on;
  return out;
}

ObservationNetwork ObservationNetwork::with_element(const std::string& id, Role role) const {
  if (id.empty()) throw std::invalid_argument("element id must not be empty");
  if (id == kEnvObserver)
    throw std::invalid_argument("element id 'env' is reserved for the environment");
  if (has_element(id)) throw std::invalid_argument("duplicate element id: '" + id + "'");
  ObservationNetwork out = *this;
  out.elements_.push_back(Element{id, 0, role});
  out.ledger_.entries_.emplace(id, 0);
  return out;
}

int ObservationNetwork::total_splits() const {
  int total = 0;
  for (const Element& e : elements_) total += e.splits;
  return total;
}

double ObservationNetwork::total_entropy_model_nats() const {
  return splits_to_model_nats(total_splits(), temperature_);
}

double ObservationNetwork::total_entropy_physical_nats() const {
  return splits_to_physical_nats(total_splits(), temperature_);
}

void ObservationNetwork::apply_observation(const std::string& observer,
                                           const std::string& observed, int order) {
  if (!has_element(observer)) throw std::invalid_argument("no such element: '" + observer + "'");
  if (!has_element(observed)) throw std::invalid_argument("no such element: '" + observed + "'");
  if (observer == observed)
    throw std::invalid_argument("self-observation is not permitted: '" + observer + "'");
  if (has_edge(observer, observed))
    throw std::invalid_argument("duplicate observation: '" + observer + "' already observed '" +
                                observed + "'");
  if (order < next_order_)
    throw std::invalid_argument("observation order " + std::to_string(order) +
                                " collides with an existing event");

  edges_.push_back(ObservationEdge{observer, observed, order});
  for (Element& e : elements_)
    if (e.id == observer) ++e.splits;
  ledger_.entries_[observer] += 1;
  ledger_.steps_.push_back(LedgerStep{order, observer, observed, 1, 1, ledger_.env_absorbed_});
  next_order_ = order + 1;

  if (auto_dissipate_) {
    // The observer's split is dumped straight to the environment while the
    // observer keeps its states: a retain-mode hand-off of exactly one split.
    ledger_.env_absorbed_ += 1;
    ledger_.steps_.push_back(
        LedgerStep{next_order_, kEnvObserver, observer, 1, 1, ledger_.env_absorbed_});
    ++next_order_;
  }
}

ObservationNetwork observe(const ObservationNetwork& net, const std::string& observer,
                           const std::string& observed) {
  ObservationNetwork out = net;
  out.apply_observation(observer, observed, out.next_order_);
  return out;
}

ObservationNetwork observe_with_order(const ObservationNetwork& net, const std::string& observer,
                                      const std::string& observed, int order) {
  ObservationNetwork out = net;
  out.apply_observation(observer, observed, order);
  return out;
}

void ObservationNetwork::apply_dissipation(const std::string& id, DissipationMode mode) {
  const Element& target = element(id);  // throws if missing
  const int held = target.splits;
  if (held == 0) return;

  ledger_.env_absorbed_ += held;
  const int created = mode == DissipationMode::retain ? held : 0;
  ledger_.steps_.push_back(
      LedgerStep{next_order_, kEnvObserver, id, held, created, ledger_.env_absorbed_});
  ++next_order_;

  if (mode == DissipationMode::erase) {
    for (Element& e : elements_)
      if (e.id == id) e.splits = 0;
    ledger_.entries_[id] = 0;
  }
}

ObservationNetwork dissipate_to_environment(const ObservationNetwork& net, const std::string& id,
                                            DissipationMode mode) {
  ObservationNetwork out = net;
  out.apply_dissipation(id, mode);
  return out;
}

double splits_to_model_nats(int splits, double temperature) {
  return static_cast<double>(splits) * temperature;
}

double splits_to_physical_nats(int splits, double temperature) {
  return static_cast<double>(splits) * temperature * ln2;
}

double element_entropy(int splits, double kelvin) {
  if (splits < 0) throw std::invalid_argument("split count must be non-negative");
  if (!(kelvin > 0.0)) throw std::domain_error("temperature must be positive");
  return splits_to_physical_nats(splits, kelvin);
}

double landauer_energy(double kelvin) {
  if (!(kelvin > 0.0)) throw std::domain_error("temperature must be positive");
  return k_boltzmann * kelvin * ln2;
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("probability must lie in [0, 1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log(p) - (1.0 - p) * std::log(1.0 - p);
}

double transition_profile(double t, TransitionMode mode) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("transition parameter must lie in [0, 1]");
  switch (mode) {
    case TransitionMode::kronecker: return t == 0.5 ? 1.0 : 0.0;
    case TransitionMode::binary_entropy: return binary_entropy(t);
  }
  throw std::logic_error("unhandled TransitionMode value");
}

}  // namespace entronet
