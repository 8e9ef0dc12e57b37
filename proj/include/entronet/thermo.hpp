#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

// Continuous analog of the threshold gate: entropy as a conserved fluid
// pumped between reservoirs in fixed quanta.
//
// A reservoir holds an accumulated-entropy account (starting at 0) bounded
// below by a floor — a drained reservoir has nothing left to give, like an
// ice block that has fully frozen its surroundings' interface. Each pump
// activation moves one quantum from source to sink; with noise_sigma > 0 the
// quantum is scaled by (1 + N(0, sigma)), clamped to be non-negative, and
// clipped to what the source can still supply. Transfers conserve entropy
// exactly: the sink gains precisely what the source loses.
//
// The gate sits on three reservoirs a, b, o. Per step, each input's pump
// fires once, interleaved (a's then b's): a true input pumps one quantum
// into o; a false input pumps one quantum out of o back toward the input
// side. After n_steps the gate reads
//     u = (acc_o - floor) / (max_gain - floor)   clamped to [0, 1],
// where max_gain = n_steps * (sum of pump quanta) and floor defaults to
// -max_gain. Noiseless, u lands exactly on 0 (both false), 1/2 (mixed) and
// 1 (both true), and the usual NAND/NOR thresholds apply unchanged.

namespace entronet {

struct GateReadout;  // gates.hpp

struct Reservoir {
  std::string id;
  double accumulated_entropy = 0.0;  // model nats, relative to the start
  double entropy_floor = -1e300;     // account may not drop below this
  // Melt bookkeeping: fraction of the reservoir's phase budget spent,
  // where melt_entropy is the full-melt total. Purely diagnostic.
  double melt_fraction = 0.0;
  double melt_entropy = 4.0;
};

struct PumpLink {
  std::string source;
  std::string sink;
  double quantum = 1.0;      // model nats per activation; must be positive
  double noise_sigma = 0.0;  // relative noise on the quantum; must be >= 0
};

// Move one (noisy) quantum from source to sink in place. Returns the amount
// actually transferred after clamping to the source's remaining supply.
// Throws std::invalid_argument if the link endpoints do not name the given
// reservoirs or the link parameters are out of range.
double pump_step(Reservoir& source, Reservoir& sink, const PumpLink& link, std::mt19937_64& rng);

struct ThermoGateConfig {
  std::vector<Reservoir> reservoirs;  // exactly a, b, o
  std::vector<PumpLink> pumps;        // exactly a->o and b->o
  int n_steps = 8;
  double quantum = 1.0;      // default pump quantum
  double noise_sigma = 0.0;  // default pump noise
  std::optional<double> floor;  // default: -max_gain
  std::uint64_t seed = 0;

  double max_gain() const;       // n_steps * sum of pump quanta
  double resolved_floor() const;
  void validate() const;         // throws std::invalid_argument
};

// Built-in config: unit quanta, 8 steps, no noise.
ThermoGateConfig default_thermo_config();

ThermoGateConfig thermo_config_from_json(const std::string& text);
ThermoGateConfig load_thermo_config(const std::string& path);

struct ThermoTrialResult {
  double u = 0.0;
  bool output = false;  // NAND readout
  std::vector<Reservoir> reservoirs;  // final states, config order
};

ThermoTrialResult run_gate_trial(bool a, bool b, const ThermoGateConfig& config,
                                 std::uint64_t seed);

struct ThermoPairStats {
  bool a = false;
  bool b = false;
  int trials = 0;
  int correct = 0;   // matched the ideal NAND output
  double accuracy = 0.0;
  double mean_u = 0.0;
  double std_u = 0.0;
};

struct ThermoReport {
  std::vector<ThermoPairStats> pairs;  // (0,0), (0,1), (1,0), (1,1)
};

// Runs `trials` independent trials per input pair. Seeding is derived from
// `seed`, the pair index and the trial index, so equal seeds give
// bit-identical reports regardless of how the work is chunked.
ThermoReport run_monte_carlo(const ThermoGateConfig& config, int trials, std::uint64_t seed);

// CSV with header: a,b,trials,correct,accuracy,mean_u,std_u
std::string monte_carlo_csv(const ThermoReport& report);

}  // namespace entronet
