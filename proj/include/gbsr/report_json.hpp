#pragma once

// Machine-readable reports. Keys are stable; output is deterministic.

#include <string>

#include "gbsr/explorer.hpp"
#include "gbsr/rigidity.hpp"

namespace gbsr {

std::string verdict_json(const Graph& g, const RigidityVerdict& v);
std::string explore_json(const ExploreReport& r);
std::string graph_json(const Graph& g);

}  // namespace gbsr
