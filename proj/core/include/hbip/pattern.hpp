#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "hbip/graph.hpp"

namespace hbip {

/// Small labeled pattern graph H on vertices 0..r-1 (at most 64).
/// Requires r >= 2, at least one edge, no loops or duplicate edges.
/// Isolated pattern vertices are allowed.
class PatternGraph {
 public:
  static constexpr int kMaxVertices = 64;

  static PatternGraph from_edges(int r, std::span<const std::pair<int, int>> edges);
  static PatternGraph from_edges(int r, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(r, std::span(edges.begin(), edges.size()));
  }
  static PatternGraph clique(int r);   // K_r, r >= 2
  static PatternGraph path(int r);     // P_r: 0-1-...-(r-1), r >= 2
  static PatternGraph cycle(int r);    // C_r: 0-1-...-(r-1)-0, r >= 3

  int order() const { return r_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(int a, int b) const {
    return a != b && (adj_[static_cast<std::size_t>(a)] >> b) & 1u;
  }
  /// Bitmask of neighbors of pattern vertex a.
  std::uint64_t adjacency_mask(int a) const { return adj_[static_cast<std::size_t>(a)]; }
  int degree(int a) const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Structural shape checks used for engine routing (label-independent).
  bool is_complete() const;
  bool is_c4() const;

 private:
  int r_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace hbip
