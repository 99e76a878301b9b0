#pragma once

#include <span>
#include <string>
#include <vector>

#include "hbip/containment.hpp"
#include "hbip/graph.hpp"
#include "hbip/pattern.hpp"
#include "hbip/solver_types.hpp"

namespace hbip {

struct CertificateCheck {
  bool ok = true;
  std::string message;  // set when not ok

  explicit operator bool() const { return ok; }
};

// Checks that cert splits V(g) into two disjoint, covering, non-empty parts
// and that neither part contains h per `variant`.
CertificateCheck verify_bipartition(const Graph& g, const PatternGraph& h,
                                    ContainmentVariant variant, const Bipartition& cert);

// Checks that parts (any count, empties allowed) are disjoint, cover V(g),
// and that none contains h per `variant`.
CertificateCheck verify_parts(const Graph& g, const PatternGraph& h, ContainmentVariant variant,
                              std::span<const std::vector<Vertex>> parts);

}  // namespace hbip
