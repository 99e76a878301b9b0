#include "hbip/c4_solver.hpp"

#include <chrono>

#include "dp_core.hpp"
#include "policies.hpp"

namespace hbip {

Decision solve_c4(const Graph& g, const NiceTreeDecomposition& nt, const SolveOptions& opts,
                  C4Trace* trace) {
  const auto t0 = std::chrono::steady_clock::now();
  auto stamp = [&t0](Decision& d) {
    d.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  Decision d;
  d.engine = EngineKind::kC4;
  d.stats.node_count = nt.size();

  if (g.order() < 2) {
    d.outcome = Outcome::kNo;
    stamp(d);
    return d;
  }
  if (detail::width_refused(nt, opts, kC4WidthCapDefault, d)) {
    stamp(d);
    return d;
  }

  detail::BipartitionEngine<detail::C4Policy> engine(nt, detail::C4Policy{&g});
  const bool yes = engine.run(opts.threads);
  d.stats.peak_states = engine.peak_states();

  if (trace) {
    trace->states.assign(static_cast<std::size_t>(nt.size()), {});
    for (int id = 0; id < nt.size(); ++id) {
      for (const auto& s : engine.table(id)) {
        trace->states[static_cast<std::size_t>(id)].push_back({s.a_mask, s.a, s.b});
      }
    }
  }

  if (!yes) {
    d.outcome = Outcome::kNo;
  } else {
    d.outcome = Outcome::kYes;
    if (opts.want_certificate) d.certificate = detail::make_bipartition(engine.replay(g.order()));
  }
  stamp(d);
  return d;
}

}  // namespace hbip
