#pragma once

#include <string>

#include "entronet/core.hpp"

// Serialization for observation networks.
//
// Network JSON:
//   {
//     "temperature": 1.0,
//     "elements": [{"id": "a", "role": "input"}, ...],
//     "edges":    [{"observer": "a", "observed": "o", "order": 0}, ...]
//   }
// Elements appear in insertion order, edges sorted by order. Loading replays
// the edge stream through the normal observation path, so a loaded network
// carries a consistent ledger and round-trips to the same document.
//
// Ledger CSV: header
//   order,observer,observed,delta_model_nats,delta_physical_nats,env_absorbed
// one row per ledger step; env_absorbed is the cumulative physical-nat total.

namespace entronet {

std::string network_to_json(const ObservationNetwork& net);
ObservationNetwork network_from_json(const std::string& text);

ObservationNetwork load_network(const std::string& path);
void save_network(const ObservationNetwork& net, const std::string& path);

std::string ledger_to_csv(const ObservationNetwork& net);

// Shortest round-trippable decimal form of v (no trailing zero padding).
std::string format_double(double v);

}  // namespace entronet
