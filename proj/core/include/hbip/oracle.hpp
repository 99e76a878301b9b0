#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hbip/containment.hpp"
#include "hbip/graph.hpp"
#include "hbip/pattern.hpp"
#include "hbip/solver_types.hpp"

namespace hbip {

// Exhaustive enumeration gets expensive fast; inputs beyond these limits
// are refused rather than attempted.
struct OracleBudget {
  Vertex max_vertices = 14;
  std::uint64_t max_assignments = 100000;
};

struct OracleDecision {
  Outcome outcome = Outcome::kNo;
  std::optional<Bipartition> certificate;
  std::string diagnostic;
};

struct QOracleDecision {
  Outcome outcome = Outcome::kNo;
  std::optional<std::vector<std::vector<Vertex>>> parts;
  std::string diagnostic;
};

// Reference deciders by direct enumeration over assignments, pruned as each
// vertex is placed. Entirely independent of the decomposition machinery, so
// they can arbitrate it.
OracleDecision oracle_bipartition(const Graph& g, const PatternGraph& h,
                                  ContainmentVariant variant, const OracleBudget& budget = {});

QOracleDecision oracle_qpartition(const Graph& g, const PatternGraph& h,
                                  ContainmentVariant variant, int q,
                                  const OracleBudget& budget = {});

}  // namespace hbip
