#include "hbip/clique_solver.hpp"

#include <chrono>
#include <stdexcept>

#include "dp_core.hpp"
#include "policies.hpp"

namespace hbip {

Decision solve_clique(const Graph& g, const NiceTreeDecomposition& nt, int r,
                      const SolveOptions& opts, CliqueTrace* trace) {
  if (r < 2) throw std::invalid_argument("clique pattern needs at least two vertices");
  const auto t0 = std::chrono::steady_clock::now();
  auto stamp = [&t0](Decision& d) {
    d.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  Decision d;
  d.engine = EngineKind::kClique;
  d.stats.node_count = nt.size();

  if (g.order() < 2) {
    d.outcome = Outcome::kNo;
    stamp(d);
    return d;
  }
  if (detail::width_refused(nt, opts, kCliqueWidthCapDefault, d)) {
    stamp(d);
    return d;
  }

  // A clique never outgrows a bag: with r above width+1 the graph holds no
  // clique on r vertices at all, so every split works.
  if (r > nt.width() + 1 && !trace) {
    d.outcome = Outcome::kYes;
    if (opts.want_certificate) {
      std::vector<std::uint8_t> in_a(g.order(), 1);
      in_a[0] = 0;
      d.certificate = detail::make_bipartition(in_a);
    }
    stamp(d);
    return d;
  }

  detail::BipartitionEngine<detail::CliquePolicy> engine(nt, detail::CliquePolicy{&g, r});
  const bool yes = engine.run(opts.threads);
  d.stats.peak_states = engine.peak_states();

  if (trace) {
    trace->masks.assign(static_cast<std::size_t>(nt.size()), {});
    for (int id = 0; id < nt.size(); ++id) {
      for (const auto& s : engine.table(id)) {
        trace->masks[static_cast<std::size_t>(id)].push_back(s.a_mask);
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
