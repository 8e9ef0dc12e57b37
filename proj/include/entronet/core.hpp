#pragma once

#include <map>
#include <string>
#include <vector>

// Discrete observation networks.
//
// An element is a finite register of distinguishable states. Performing one
// observation splits every state of the observer in two, so an element that
// has performed `splits` observations holds m = 2^splits states and carries
// entropy T * ln(m) = splits * T * ln(2). We do all bookkeeping on the
// integer split count and convert to nats only at the edges:
//
//   model nats     = splits * T          (one observation == one model nat)
//   physical nats  = splits * T * ln(2)
//
// Observations are directed: the observer gains a split, the observed loses
// standing relative to it. A network is a simple digraph of such events plus
// a ledger that tracks where every split went, including entropy handed to
// the environment when an element is reset.

namespace entronet {

// Boltzmann constant, J/K (2019 SI exact value).
inline constexpr double k_boltzmann = 1.380649e-23;

enum class Role { plain, input, output, environment };

std::string role_name(Role role);
Role role_from_name(const std::string& name);

struct Element {
  std::string id;
  int splits = 0;  // observations performed; state count is 2^splits
  Role role = Role::plain;
};

// Directed observation event: `observer` observed `observed`. The order is
// the global sequence number of the event and is unique within a network.
struct ObservationEdge {
  std::string observer;
  std::string observed;
  int order = 0;
};

// What happens to an element's accumulated states when its entropy is
// dissipated to the environment: `retain` keeps the states (the environment
// absorbs a copy of the entropy, as when the element thermalises), `erase`
// resets the element to a single state (the entropy leaves with the reset).
enum class DissipationMode { retain, erase };

// One ledger row. `delta_splits` is credited to `observer`; dissipation rows
// use the reserved observer id "env" and mean the environment absorbed that
// many splits from `observed`. `created_splits` is the step's net addition
// to the closed system (element entropies plus environment): +1 for an
// observation, +k for a retain-mode dissipation of k splits, 0 for an
// erase-mode dissipation (the entropy moves, nothing new appears).
struct LedgerStep {
  int order = 0;
  std::string observer;
  std::string observed;
  int delta_splits = 0;
  int created_splits = 0;
  int env_absorbed_after = 0;  // cumulative environment entropy, splits
};

class ObservationNetwork;

// Append-only record of every entropy movement in a network. Reconciliation
// invariant, checked by reconciles(): the sum of created_splits over all
// steps equals the sum of current element entropies plus env_absorbed.
class EntropyLedger {
 public:
  const std::vector<LedgerStep>& steps() const { return steps_; }
  // Current entropy per element, in splits.
  const std::map<std::string, int>& entries() const { return entries_; }
  int entry_splits(const std::string& id) const;
  int env_absorbed_splits() const { return env_absorbed_; }
  int total_created_splits() const;
  bool reconciles() const;

 private:
  friend class ObservationNetwork;
  std::vector<LedgerStep> steps_;
  std::map<std::string, int> entries_;
  int env_absorbed_ = 0;
};

// Immutable-style network: mutating operations return a modified copy so
// intermediate states stay inspectable. Elements keep insertion order.
class ObservationNetwork {
 public:
  ObservationNetwork() = default;
  explicit ObservationNetwork(double temperature);

  double temperature() const { return temperature_; }
  const std::vector<Element>& elements() const { return elements_; }
  const std::vector<ObservationEdge>& edges() const { return edges_; }
  const EntropyLedger& ledger() const { return ledger_; }

  bool has_element(const std::string& id) const;
  const Element& element(const std::string& id) const;
  bool has_edge(const std::string& observer, const std::string& observed) const;

  // When on, every observation immediately hands one split to the
  // environment as well (the observer's work is dumped as it happens).
  // Off by default: observations accumulate and dissipation is explicit.
  bool auto_dissipate() const { return auto_dissipate_; }
  ObservationNetwork with_auto_dissipate(bool on) const;

  ObservationNetwork with_element(const std::string& id, Role role = Role::plain) const;

  int total_splits() const;
  double total_entropy_model_nats() const;
  double total_entropy_physical_nats() const;

 private:
  friend ObservationNetwork observe(const ObservationNetwork&, const std::string&,
                                    const std::string&);
  friend ObservationNetwork observe_with_order(const ObservationNetwork&, const std::string&,
                                               const std::string&, int);
  friend ObservationNetwork dissipate_to_environment(const ObservationNetwork&,
                                                     const std::string&, DissipationMode);

  void apply_observation(const std::string& observer, const std::string& observed, int order);
  void apply_dissipation(const std::string& id, DissipationMode mode);

  double temperature_ = 1.0;
  std::vector<Element> elements_;
  std::vector<ObservationEdge> edges_;
  EntropyLedger ledger_;
  bool auto_dissipate_ = false;
  int next_order_ = 0;
};

// Record one observation. Throws std::invalid_argument if either element is
// missing, observer == observed, or the pair was already observed in this
// direction (the graph is simple).
ObservationNetwork observe(const ObservationNetwork& net, const std::string& observer,
                           const std::string& observed);

// Same, but with an explicit sequence number. `order` must be at least the
// network's next free sequence number; used when replaying stored event
// streams whose numbering has gaps.
ObservationNetwork observe_with_order(const ObservationNetwork& net, const std::string& observer,
                                      const std::string& observed, int order);

// Hand an element's accumulated entropy to the environment. A no-op (no
// ledger row) if the element holds no splits.
ObservationNetwork dissipate_to_environment(const ObservationNetwork& net, const std::string& id,
                                            DissipationMode mode);

// Entropy of an element with 2^splits states at temperature `kelvin`, in
// physical nats: splits * kelvin * ln(2). Throws std::invalid_argument for
// splits < 0 and std::domain_error for kelvin <= 0.
double element_entropy(int splits, double kelvin);

double splits_to_model_nats(int splits, double temperature);
double splits_to_physical_nats(int splits, double temperature);

// Minimum energy to erase one two-state split at temperature `kelvin`:
// k_B * kelvin * ln(2), in joules. Throws std::domain_error for kelvin <= 0.
double landauer_energy(double kelvin);

// Shannon entropy of a two-outcome distribution, in nats:
// -p ln p - (1-p) ln(1-p), with H(0) = H(1) = 0. Throws std::domain_error
// unless 0 <= p <= 1.
double binary_entropy(double p);

enum class TransitionMode {
  kronecker,       // 1 exactly at t == 0.5, else 0: a bare distinguishability event
  binary_entropy,  // H(t): the smooth mixing profile
};

// Entropy profile of a two-state transition parametrised by t in [0, 1].
// Throws std::domain_error for t outside [0, 1].
double transition_profile(double t, TransitionMode mode);

}  // namespace entronet
