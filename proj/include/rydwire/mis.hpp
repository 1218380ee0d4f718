#pragma once

#include "rydwire/graph.hpp"

namespace rydwire {

// Largest graph the exhaustive oracle accepts.
inline constexpr int kMisOracleMaxVertices = 30;

// Every maximum independent set of g (the full degenerate family), found by
// branch-and-bound subset enumeration. Throws CapacityError above
// kMisOracleMaxVertices.
VertexSetFamily mis_brute_force(const Graph& g);

// Size of a maximum independent set.
int independence_number(const Graph& g);

} // namespace rydwire
