#pragma once

#include <cstdint>

#include "hbip/decomposition.hpp"
#include "hbip/graph.hpp"

namespace hbip {

// Builds a tree decomposition with the min-fill elimination heuristic:
// repeatedly eliminate a vertex whose neighbourhood needs the fewest fill
// edges to become a clique. Ties are broken by a seed-determined vertex
// ranking; seed 0 ranks vertices by id, so results are reproducible and
// different seeds explore different tie-break orders.
TreeDecomposition heuristic_decomposition(const Graph& g, std::uint64_t seed = 0);

}  // namespace hbip
