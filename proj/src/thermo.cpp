#include "entronet/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "entronet/gates.hpp"
#include "entronet/network_io.hpp"

namespace entronet {

namespace {

using nlohmann::json;

// SplitMix64: cheap, well-mixed 64-bit hash used to derive independent
// trial seeds from (seed, pair, trial) without sharing stream state.
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

void check_link(const PumpLink& link) {
  if (!(link.quantum > 0.0)) throw std::invalid_argument("pump quantum must be positive");
  if (!(link.noise_sigma >= 0.0)) throw std::invalid_argument("noise_sigma must be non-negative");
  if (link.source == link.sink)
    throw std::invalid_argument("pump link must join two distinct reservoirs");
}

[[noreturn]] void bad_config(const std::string& why) {
  throw std::invalid_argument("invalid thermo config: " + why);
}

int reservoir_index(const std::vector<Reservoir>& reservoirs, const std::string& id) {
  for (std::size_t i = 0; i < reservoirs.size(); ++i)
    if (reservoirs[i].id == id) return static_cast<int>(i);
  throw std::invalid_argument("no such reservoir: '" + id + "'");
}

}  // namespace

double pump_step(Reservoir& source, Reservoir& sink, const PumpLink& link, std::mt19937_64& rng) {
  check_link(link);
  if (source.id != link.source || sink.id != link.sink)
    throw std::invalid_argument("pump link joins '" + link.source + "' -> '" + link.sink +
                                "', not '" + source.id + "' -> '" + sink.id + "'");

  double quantum = link.quantum;
  if (link.noise_sigma > 0.0) {
    std::normal_distribution<double> noise(0.0, link.noise_sigma);
    quantum *= 1.0 + noise(rng);
    if (quantum < 0.0) quantum = 0.0;  // a pump cannot run backwards
  }

  // A drained source pins the transfer to what is left above its floor.
  const double available = source.accumulated_entropy - source.entropy_floor;
  const double moved = std::clamp(quantum, 0.0, std::max(available, 0.0));

  source.accumulated_entropy -= moved;
  sink.accumulated_entropy += moved;
  // Gaining entropy melts a reservoir; losing it refreezes.
  source.melt_fraction = std::clamp(source.melt_fraction - moved / source.melt_entropy, 0.0, 1.0);
  sink.melt_fraction = std::clamp(sink.melt_fraction + moved / sink.melt_entropy, 0.0, 1.0);
  return moved;
}

double ThermoGateConfig::max_gain() const {
  double per_step = 0.0;
  for (const PumpLink& pump : pumps) per_step += pump.quantum;
  return n_steps * per_step;
}

double ThermoGateConfig::resolved_floor() const {
  return floor.value_or(-max_gain());
}

void ThermoGateConfig::validate() const {
  if (n_steps < 1) bad_config("n_steps must be at least 1");
  if (!(quantum > 0.0)) bad_config("quantum must be positive");
  if (!(noise_sigma >= 0.0)) bad_config("noise_sigma must be non-negative");

  if (reservoirs.size() != 3) bad_config("exactly the reservoirs a, b and o are required");
  for (const char* id : {"a", "b", "o"})
    if (std::none_of(reservoirs.begin(), reservoirs.end(),
                     [&](const Reservoir& r) { return r.id == id; }))
      bad_config(std::string("missing reservoir '") + id + "'");
  for (const Reservoir& r : reservoirs)
    if (!(r.melt_entropy > 0.0)) bad_config("melt_entropy must be positive");

  if (pumps.size() != 2) bad_config("exactly two pumps (a->o and b->o) are required");
  for (const PumpLink& pump : pumps) {
    if (pump.sink != "o") bad_config("every pump must sink into 'o'");
    if (pump.source != "a" && pump.source != "b") bad_config("pump sources must be 'a' and 'b'");
    try {
      check_link(pump);
    } catch (const std::invalid_argument& e) {
      bad_config(e.what());
    }
  }
  if (pumps[0].source == pumps[1].source) bad_config("pump sources must be distinct");

  if (floor && !(*floor <= 0.0)) bad_config("floor must not be positive");
}

ThermoGateConfig default_thermo_config() {
  ThermoGateConfig config;
  config.reservoirs = {Reservoir{"a"}, Reservoir{"b"}, Reservoir{"o"}};
  config.pumps = {PumpLink{"a", "o", config.quantum, config.noise_sigma},
                  PumpLink{"b", "o", config.quantum, config.noise_sigma}};
  return config;
}

ThermoGateConfig thermo_config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad_config(e.what());
  }
  if (!j.is_object()) bad_config("top level must be an object");

  ThermoGateConfig config;
  try {
    if (j.contains("n_steps")) config.n_steps = j["n_steps"].get<int>();
    if (j.contains("quantum")) config.quantum = j["quantum"].get<double>();
    if (j.contains("noise_sigma")) config.noise_sigma = j["noise_sigma"].get<double>();
    if (j.contains("floor")) config.floor = j["floor"].get<double>();
    if (j.contains("seed")) config.seed = j["seed"].get<std::uint64_t>();

    if (j.contains("reservoirs")) {
      for (const json& jr : j["reservoirs"]) {
        Reservoir r;
        r.id = jr.at("id").get<std::string>();
        if (jr.contains("melt_entropy")) r.melt_entropy = jr["melt_entropy"].get<double>();
        config.reservoirs.push_back(r);
      }
    } else {
      config.reservoirs = {Reservoir{"a"}, Reservoir{"b"}, Reservoir{"o"}};
    }

    if (j.contains("pumps")) {
      for (const json& jp : j["pumps"]) {
        PumpLink pump;
        pump.source = jp.at("source").get<std::string>();
        pump.sink = jp.at("sink").get<std::string>();
        pump.quantum = jp.contains("quantum") ? jp["quantum"].get<double>() : config.quantum;
        pump.noise_sigma =
            jp.contains("noise_sigma") ? jp["noise_sigma"].get<double>() : config.noise_sigma;
        config.pumps.push_back(pump);
      }
    } else {
      config.pumps = {PumpLink{"a", "o", config.quantum, config.noise_sigma},
                      PumpLink{"b", "o", config.quantum, config.noise_sigma}};
    }
  } catch (const json::exception& e) {
    bad_config(e.what());
  }

  config.validate();
  return config;
}

ThermoGateConfig load_thermo_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open thermo config: '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return thermo_config_from_json(buf.str());
}

ThermoTrialResult run_gate_trial(bool a, bool b, const ThermoGateConfig& config,
                                 std::uint64_t seed) {
  config.validate();

  std::vector<Reservoir> reservoirs = config.reservoirs;
  const double floor = config.resolved_floor();
  for (Reservoir& r : reservoirs) r.entropy_floor = floor;

  const int idx_o = reservoir_index(reservoirs, "o");
  std::mt19937_64 rng(seed);

  for (int step = 0; step < config.n_steps; ++step) {
    for (const PumpLink& pump : config.pumps) {
      const int idx_in = reservoir_index(reservoirs, pump.source);
      const bool value = pump.source == "a" ? a : b;
      if (value) {
        // True input: the pump runs forward, charging the output reservoir.
        pump_step(reservoirs[idx_in], reservoirs[idx_o], pump, rng);
      } else {
        // False input: the pump runs toward the input side, draining o.
        PumpLink reversed{pump.sink, pump.source, pump.quantum, pump.noise_sigma};
        pump_step(reservoirs[idx_o], reservoirs[idx_in], reversed, rng);
      }
    }
  }

  ThermoTrialResult result;
  const double span = config.max_gain() - floor;
  result.u = std::clamp((reservoirs[idx_o].accumulated_entropy - floor) / span, 0.0, 1.0);
  result.output = read_gate(result.u, GateKind::nand, GateReadout{});
  result.reservoirs = std::move(reservoirs);
  return result;
}

ThermoReport run_monte_carlo(const ThermoGateConfig& config, int trials, std::uint64_t seed) {
  config.validate();
  if (trials < 1) throw std::invalid_argument("trial count must be at least 1");

  ThermoReport report;
  const bool pairs[4][2] = {{false, false}, {false, true}, {true, false}, {true, true}};
  for (int p = 0; p < 4; ++p) {
    const bool a = pairs[p][0], b = pairs[p][1];
    const bool ideal = !(a && b);
    const std::uint64_t pair_seed = splitmix64(seed ^ (0x9E3779B97F4A7C15ull * (p + 1)));

    ThermoPairStats stats;
    stats.a = a;
    stats.b = b;
    stats.trials = trials;
    double mean = 0.0, m2 = 0.0;  // Welford
    for (int t = 0; t < trials; ++t) {
      const ThermoTrialResult trial = run_gate_trial(a, b, config, splitmix64(pair_seed + t));
      if (trial.output == ideal) ++stats.correct;
      const double delta = trial.u - mean;
      mean += delta / (t + 1);
      m2 += delta * (trial.u - mean);
    }
    stats.accuracy = static_cast<double>(stats.correct) / trials;
    stats.mean_u = mean;
    stats.std_u = trials > 1 ? std::sqrt(m2 / trials) : 0.0;
    report.pairs.push_back(stats);
  }
  return report;
}

std::string monte_carlo_csv(const ThermoReport& report) {
  std::ostringstream out;
  out << "a,b,trials,correct,accuracy,mean_u,std_u\n";
  for (const ThermoPairStats& stats : report.pairs)
    out << (stats.a ? 1 : 0) << ',' << (stats.b ? 1 : 0) << ',' << stats.trials << ','
        << stats.correct << ',' << format_double(stats.accuracy) << ','
        << format_double(stats.mean_u) << ',' << format_double(stats.std_u) << '\n';
  return out.str();
}

}  // namespace entronet
