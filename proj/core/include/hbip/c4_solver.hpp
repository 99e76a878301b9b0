#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hbip/graph.hpp"
#include "hbip/nice_tree.hpp"
#include "hbip/solver_types.hpp"

namespace hbip {

inline constexpr int kC4WidthCapDefault = 12;

// Reachable table rows per nice-tree node: part-A bag mask plus, per part,
// the bag pairs that share exactly one departed common neighbour in that
// part. For cross-checking against direct enumeration.
struct C4TraceState {
  std::uint32_t a_mask = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs_a;
  std::vector<std::pair<Vertex, Vertex>> pairs_b;
};

struct C4Trace {
  std::vector<std::vector<C4TraceState>> states;
};

// Decides whether V(g) can be split into two non-empty parts such that
// neither part contains a cycle on four vertices as a subgraph.
Decision solve_c4(const Graph& g, const NiceTreeDecomposition& nt, const SolveOptions& opts = {},
                  C4Trace* trace = nullptr);

}  // namespace hbip
