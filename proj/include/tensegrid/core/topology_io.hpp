#pragma once

#include <string>

#include "tensegrid/core/types.hpp"

namespace tensegrid {

/// Topology document:
/// {"rods":[{"mass","length","radius"}],
///  "cables":[{"a":{"rod","offset":[3]},"b":{...},"K","k","rest_length","motor_scale"}],
///  "contact":{"Kg","kg","mu","e"}}
Topology topology_from_json(const std::string& text);
Topology load_topology(const std::string& path);
std::string topology_to_json(const Topology& topology);
void save_topology(const Topology& topology, const std::string& path);

}  // namespace tensegrid
