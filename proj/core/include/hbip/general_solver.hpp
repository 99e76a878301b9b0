#pragma once

#include <cstdint>
#include <vector>

#include "hbip/containment.hpp"
#include "hbip/graph.hpp"
#include "hbip/nice_tree.hpp"
#include "hbip/pattern.hpp"
#include "hbip/sequence.hpp"
#include "hbip/solver_types.hpp"

namespace hbip {

inline constexpr int kGeneralWidthCapDefault = 12;

// Reachable table rows per nice-tree node: part-A bag mask plus the live
// partial-placement sets of both parts. For cross-checking against direct
// enumeration.
struct GeneralTraceState {
  std::uint32_t a_mask = 0;
  std::vector<Sequence> seqs_a;
  std::vector<Sequence> seqs_b;
};

struct GeneralTrace {
  std::vector<std::vector<GeneralTraceState>> states;
};

// Decides whether V(g) can be split into two non-empty parts such that
// neither part contains h — as a subgraph or as an induced subgraph,
// per `variant`. Patterns above kMaxPatternSize vertices are refused.
Decision solve_general(const Graph& g, const NiceTreeDecomposition& nt, const PatternGraph& h,
                       ContainmentVariant variant, const SolveOptions& opts = {},
                       GeneralTrace* trace = nullptr);

}  // namespace hbip
