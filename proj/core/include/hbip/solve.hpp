#pragma once

#include "hbip/containment.hpp"
#include "hbip/decomposition.hpp"
#include "hbip/graph.hpp"
#include "hbip/pattern.hpp"
#include "hbip/qcoloring.hpp"
#include "hbip/solver_types.hpp"

namespace hbip {

// Picks the specialised engine for complete patterns and for the 4-cycle in
// the subgraph variant; everything else goes to the general engine. Forcing
// an engine that cannot represent the pattern/variant throws InputError.
EngineKind select_engine(const PatternGraph& h, ContainmentVariant variant,
                         EngineChoice choice = EngineChoice::kAuto);

// One-call front doors: validate the supplied decomposition (or build one
// heuristically with opts.seed), rebuild it nice, route to an engine.
Decision solve_bipartition(const Graph& g, const PatternGraph& h, ContainmentVariant variant,
                           const SolveOptions& opts = {}, const TreeDecomposition* td = nullptr,
                           EngineChoice choice = EngineChoice::kAuto);

QDecision solve_qpartition(const Graph& g, const PatternGraph& h, ContainmentVariant variant,
                           int q, const SolveOptions& opts = {},
                           const TreeDecomposition* td = nullptr,
                           EngineChoice choice = EngineChoice::kAuto);

QDecision solve_min_q(const Graph& g, const PatternGraph& h, ContainmentVariant variant,
                      const SolveOptions& opts = {}, const TreeDecomposition* td = nullptr,
                      EngineChoice choice = EngineChoice::kAuto);

}  // namespace hbip
