#include "hbip/pattern.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace hbip {

PatternGraph PatternGraph::from_edges(int r, std::span<const std::pair<int, int>> edges) {
  if (r < 2) throw InputError("pattern needs at least 2 vertices");
  if (r > kMaxVertices) {
    throw InputError("pattern too large: " + std::to_string(r) + " vertices");
  }
  if (edges.empty()) throw InputError("pattern needs at least one edge");
  PatternGraph h;
  h.r_ = r;
  h.adj_.assign(static_cast<std::size_t>(r), 0);
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= r || b >= r) {
      throw InputError("pattern edge endpoint out of range");
    }
    if (a == b) throw InputError("pattern self-loop");
    if (h.has_edge(a, b)) throw InputError("duplicate pattern edge");
    h.adj_[static_cast<std::size_t>(a)] |= 1ull << b;
    h.adj_[static_cast<std::size_t>(b)] |= 1ull << a;
    h.edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(h.edges_.begin(), h.edges_.end());
  return h;
}

PatternGraph PatternGraph::clique(int r) {
  std::vector<std::pair<int, int>> es;
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) es.emplace_back(a, b);
  return from_edges(r, es);
}

PatternGraph PatternGraph::path(int r) {
  std::vector<std::pair<int, int>> es;
  for (int a = 0; a + 1 < r; ++a) es.emplace_back(a, a + 1);
  return from_edges(r, es);
}

PatternGraph PatternGraph::cycle(int r) {
  if (r < 3) throw InputError("cycle pattern needs at least 3 vertices");
  std::vector<std::pair<int, int>> es;
  for (int a = 0; a + 1 < r; ++a) es.emplace_back(a, a + 1);
  es.emplace_back(0, r - 1);
  return from_edges(r, es);
}

int PatternGraph::degree(int a) const {
  return std::popcount(adj_[static_cast<std::size_t>(a)]);
}

bool PatternGraph::is_complete() const {
  return edge_count() == static_cast<std::size_t>(r_) * (r_ - 1) / 2;
}

bool PatternGraph::is_c4() const {
  // 4 vertices, 4 edges, all degrees 2 => a single 4-cycle.
  if (r_ != 4 || edge_count() != 4) return false;
  for (int a = 0; a < 4; ++a) {
    if (degree(a) != 2) return false;
  }
  return true;
}

}  // namespace hbip
