#include "hbip/qcoloring.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

#include "dp_core.hpp"
#include "hbip/c4_solver.hpp"
#include "hbip/clique_solver.hpp"
#include "hbip/general_solver.hpp"
#include "hbip/sequence.hpp"
#include "hbip/solve.hpp"
#include "policies.hpp"

namespace hbip {

namespace {

template <class Policy>
bool run_qpartition(const Graph& g, const NiceTreeDecomposition& nt, Policy policy, int q,
                    const SolveOptions& opts, QDecision& d) {
  detail::QPartitionEngine<Policy> engine(nt, std::move(policy), q);
  const bool yes = engine.run(opts.threads);
  d.stats.peak_states = engine.peak_states();
  if (yes && opts.want_certificate) {
    const auto part_of = engine.replay(g.order());
    std::vector<std::vector<Vertex>> parts(static_cast<std::size_t>(q));
    for (Vertex v = 0; v < g.order(); ++v) {
      parts[static_cast<std::size_t>(part_of[v])].push_back(v);
    }
    d.parts = std::move(parts);
  }
  return yes;
}

}  // namespace

QDecision solve_qpartition(const Graph& g, const NiceTreeDecomposition& nt, const PatternGraph& h,
                           ContainmentVariant variant, int q, const SolveOptions& opts,
                           EngineChoice choice) {
  if (q < 1 || q > 32) throw std::invalid_argument("part count must be between 1 and 32");
  const auto t0 = std::chrono::steady_clock::now();
  auto stamp = [&t0](QDecision& d) {
    d.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  QDecision d;
  d.q = q;
  d.engine = select_engine(h, variant, choice);
  d.stats.node_count = nt.size();

  if (d.engine == EngineKind::kGeneral && h.order() > kMaxPatternSize) {
    d.outcome = Outcome::kRefused;
    d.diagnostic = "pattern has " + std::to_string(h.order()) +
                   " vertices; this engine handles at most " + std::to_string(kMaxPatternSize);
    stamp(d);
    return d;
  }

  {
    // Same width gate as the two-part solvers.
    Decision gate;
    const int cap_default = d.engine == EngineKind::kClique ? kCliqueWidthCapDefault
                            : d.engine == EngineKind::kC4   ? kC4WidthCapDefault
                                                            : kGeneralWidthCapDefault;
    if (detail::width_refused(nt, opts, cap_default, gate)) {
      d.outcome = Outcome::kRefused;
      d.diagnostic = gate.diagnostic;
      stamp(d);
      return d;
    }
  }

  bool yes = false;
  switch (d.engine) {
    case EngineKind::kClique:
      yes = run_qpartition(g, nt, detail::CliquePolicy{&g, h.order()}, q, opts, d);
      break;
    case EngineKind::kC4:
      yes = run_qpartition(g, nt, detail::C4Policy{&g}, q, opts, d);
      break;
    case EngineKind::kGeneral:
      yes = run_qpartition(g, nt, detail::GeneralPolicy{&g, &h, variant, h.order()}, q, opts, d);
      break;
  }
  d.outcome = yes ? Outcome::kYes : Outcome::kNo;
  stamp(d);
  return d;
}

QDecision solve_min_q(const Graph& g, const NiceTreeDecomposition& nt, const PatternGraph& h,
                      ContainmentVariant variant, const SolveOptions& opts, EngineChoice choice) {
  const auto t0 = std::chrono::steady_clock::now();
  const int bound = std::max(1, nt.width() + 1);
  for (int q = 1; q <= bound; ++q) {
    QDecision d = solve_qpartition(g, nt, h, variant, q, opts, choice);
    if (d.outcome != Outcome::kNo) {
      d.stats.seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      return d;
    }
  }
  // A proper colouring with width+1 parts always works; reaching this line
  // would mean a solver bug, so fail loudly rather than guess.
  throw std::logic_error("no part count up to width+1 sufficed");
}

}  // namespace hbip
