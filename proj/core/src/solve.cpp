#include "hbip/solve.hpp"

#include "hbip/c4_solver.hpp"
#include "hbip/clique_solver.hpp"
#include "hbip/general_solver.hpp"
#include "hbip/min_fill.hpp"
#include "hbip/nice_tree.hpp"

namespace hbip {

EngineKind select_engine(const PatternGraph& h, ContainmentVariant variant, EngineChoice choice) {
  switch (choice) {
    case EngineChoice::kClique:
      if (!h.is_complete()) throw InputError("the clique engine needs a complete pattern");
      return EngineKind::kClique;
    case EngineChoice::kC4:
      if (!h.is_c4()) throw InputError("the c4 engine needs the 4-cycle pattern");
      if (variant == ContainmentVariant::kInduced) {
        throw InputError("the c4 engine decides subgraph containment only");
      }
      return EngineKind::kC4;
    case EngineChoice::kGeneral:
      return EngineKind::kGeneral;
    case EngineChoice::kAuto:
      break;
  }
  if (h.is_complete()) return EngineKind::kClique;
  if (h.is_c4() && variant == ContainmentVariant::kSubgraph) return EngineKind::kC4;
  return EngineKind::kGeneral;
}

namespace {

NiceTreeDecomposition prepare(const Graph& g, const TreeDecomposition* td,
                              const SolveOptions& opts) {
  if (td) {
    auto report = validate(g, *td);
    if (!report.ok()) {
      throw InputError("supplied decomposition is invalid:\n" + report.to_string());
    }
    return make_nice(g, *td);
  }
  return make_nice(g, heuristic_decomposition(g, opts.seed));
}

}  // namespace

Decision solve_bipartition(const Graph& g, const PatternGraph& h, ContainmentVariant variant,
                           const SolveOptions& opts, const TreeDecomposition* td,
                           EngineChoice choice) {
  const EngineKind kind = select_engine(h, variant, choice);
  const NiceTreeDecomposition nt = prepare(g, td, opts);
  switch (kind) {
    case EngineKind::kClique: return solve_clique(g, nt, h.order(), opts);
    case EngineKind::kC4: return solve_c4(g, nt, opts);
    case EngineKind::kGeneral: return solve_general(g, nt, h, variant, opts);
  }
  throw std::logic_error("unreachable engine kind");
}

QDecision solve_qpartition(const Graph& g, const PatternGraph& h, ContainmentVariant variant,
                           int q, const SolveOptions& opts, const TreeDecomposition* td,
                           EngineChoice choice) {
  const NiceTreeDecomposition nt = prepare(g, td, opts);
  return solve_qpartition(g, nt, h, variant, q, opts, choice);
}

QDecision solve_min_q(const Graph& g, const PatternGraph& h, ContainmentVariant variant,
                      const SolveOptions& opts, const TreeDecomposition* td,
                      EngineChoice choice) {
  const NiceTreeDecomposition nt = prepare(g, td, opts);
  return solve_min_q(g, nt, h, variant, opts, choice);
}

}  // namespace hbip
