#pragma once

#include <cstdint>
#include <vector>

#include "hbip/graph.hpp"
#include "hbip/nice_tree.hpp"
#include "hbip/solver_types.hpp"

namespace hbip {

inline constexpr int kCliqueWidthCapDefault = 20;

// Reachable table rows per nice-tree node: the bag-membership masks of part
// A that some valid partial partition produces. For cross-checking the
// solver against direct enumeration.
struct CliqueTrace {
  std::vector<std::vector<std::uint32_t>> masks;
};

// Decides whether V(g) can be split into two non-empty parts such that
// neither part contains a clique on r vertices. When trace is non-null the
// full table walk always runs (shortcuts are skipped) and per-node states
// are exported.
Decision solve_clique(const Graph& g, const NiceTreeDecomposition& nt, int r,
                      const SolveOptions& opts = {}, CliqueTrace* trace = nullptr);

}  // namespace hbip
