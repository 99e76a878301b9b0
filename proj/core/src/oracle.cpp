#include "hbip/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace hbip {

namespace {

// base^exp, saturating just above cap.
std::uint64_t ipow_capped(std::uint64_t base, Vertex exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (Vertex i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

}  // namespace

OracleDecision oracle_bipartition(const Graph& g, const PatternGraph& h,
                                  ContainmentVariant variant, const OracleBudget& budget) {
  OracleDecision d;
  const Vertex n = g.order();
  if (n < 2) {
    d.outcome = Outcome::kNo;
    d.diagnostic = "fewer than two vertices";
    return d;
  }
  if (n > budget.max_vertices ||
      ipow_capped(2, n - 1, budget.max_assignments) > budget.max_assignments) {
    d.outcome = Outcome::kRefused;
    d.diagnostic = "graph on " + std::to_string(n) + " vertices exceeds the enumeration budget";
    return d;
  }

  // Vertex 0 is pinned to part A; trying A before B at every depth makes the
  // first hit the lexicographically least assignment.
  std::vector<Vertex> a{0}, b;
  auto rec = [&](auto&& self, Vertex v) -> bool {
    if (v == n) return !b.empty();
    for (int s = 0; s < 2; ++s) {
      auto& part = s == 0 ? a : b;
      part.push_back(v);
      // Earlier content is copy-free by induction, so only copies through
      // the newest vertex need checking.
      if (!has_copy_through(g, h, variant, part, v) && self(self, v + 1)) return true;
      part.pop_back();
    }
    return false;
  };
  if (rec(rec, 1)) {
    d.outcome = Outcome::kYes;
    d.certificate = Bipartition{a, b};
  } else {
    d.outcome = Outcome::kNo;
  }
  return d;
}

QOracleDecision oracle_qpartition(const Graph& g, const PatternGraph& h,
                                  ContainmentVariant variant, int q,
                                  const OracleBudget& budget) {
  if (q < 1) throw std::invalid_argument("part count must be positive");
  QOracleDecision d;
  const Vertex n = g.order();
  if (n > budget.max_vertices ||
      ipow_capped(static_cast<std::uint64_t>(q), n, budget.max_assignments) >
          budget.max_assignments) {
    d.outcome = Outcome::kRefused;
    d.diagnostic = "graph on " + std::to_string(n) + " vertices with " + std::to_string(q) +
                   " parts exceeds the enumeration budget";
    return d;
  }

  std::vector<std::vector<Vertex>> parts(static_cast<std::size_t>(q));
  if (n == 0) {
    d.outcome = Outcome::kYes;
    d.parts = parts;
    return d;
  }

  // Parts are interchangeable; restricting vertex v to the first unused part
  // at most (a restricted-growth assignment) visits each partition once.
  auto rec = [&](auto&& self, Vertex v, int used) -> bool {
    if (v == n) return true;
    const int limit = std::min(q, used + 1);
    for (int p = 0; p < limit; ++p) {
      auto& part = parts[static_cast<std::size_t>(p)];
      part.push_back(v);
      if (!has_copy_through(g, h, variant, part, v) &&
          self(self, v + 1, std::max(used, p + 1))) {
        return true;
      }
      part.pop_back();
    }
    return false;
  };
  if (rec(rec, 0, 0)) {
    d.outcome = Outcome::kYes;
    d.parts = parts;
  } else {
    d.outcome = Outcome::kNo;
  }
  return d;
}

}  // namespace hbip
