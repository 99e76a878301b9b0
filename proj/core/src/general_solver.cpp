#include "hbip/general_solver.hpp"

#include <chrono>
#include <string>

#include "dp_core.hpp"
#include "policies.hpp"

namespace hbip {

Decision solve_general(const Graph& g, const NiceTreeDecomposition& nt, const PatternGraph& h,
                       ContainmentVariant variant, const SolveOptions& opts,
                       GeneralTrace* trace) {
  const auto t0 = std::chrono::steady_clock::now();
  auto stamp = [&t0](Decision& d) {
    d.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  Decision d;
  d.engine = EngineKind::kGeneral;
  d.stats.node_count = nt.size();

  if (h.order() > kMaxPatternSize) {
    d.outcome = Outcome::kRefused;
    d.diagnostic = "pattern has " + std::to_string(h.order()) +
                   " vertices; this engine handles at most " + std::to_string(kMaxPatternSize);
    stamp(d);
    return d;
  }
  if (g.order() < 2) {
    d.outcome = Outcome::kNo;
    stamp(d);
    return d;
  }
  if (detail::width_refused(nt, opts, kGeneralWidthCapDefault, d)) {
    stamp(d);
    return d;
  }

  detail::BipartitionEngine<detail::GeneralPolicy> engine(
      nt, detail::GeneralPolicy{&g, &h, variant, h.order()});
  const bool yes = engine.run(opts.threads);
  d.stats.peak_states = engine.peak_states();

  if (trace) {
    trace->states.assign(static_cast<std::size_t>(nt.size()), {});
    for (int id = 0; id < nt.size(); ++id) {
      for (const auto& s : engine.table(id)) {
        trace->states[static_cast<std::size_t>(id)].push_back(
            {s.a_mask, s.a.items(), s.b.items()});
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
