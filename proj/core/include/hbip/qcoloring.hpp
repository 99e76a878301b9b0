#pragma once

#include "hbip/containment.hpp"
#include "hbip/graph.hpp"
#include "hbip/nice_tree.hpp"
#include "hbip/pattern.hpp"
#include "hbip/solver_types.hpp"

namespace hbip {

// Decides whether V(g) can be partitioned into at most q parts — empty
// parts are allowed — such that no part contains h per `variant`. Engine
// routing matches the two-part solvers.
QDecision solve_qpartition(const Graph& g, const NiceTreeDecomposition& nt, const PatternGraph& h,
                           ContainmentVariant variant, int q, const SolveOptions& opts = {},
                           EngineChoice choice = EngineChoice::kAuto);

// The smallest q for which solve_qpartition answers yes. At most width+1
// parts are ever needed: a proper colouring of the graph splits every edge,
// and the pattern has at least one edge.
QDecision solve_min_q(const Graph& g, const NiceTreeDecomposition& nt, const PatternGraph& h,
                      ContainmentVariant variant, const SolveOptions& opts = {},
                      EngineChoice choice = EngineChoice::kAuto);

}  // namespace hbip
