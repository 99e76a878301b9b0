#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hbip {

using Vertex = std::uint32_t;

/// Thrown for malformed inputs (bad edges, bad files, inconsistent headers).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph, immutable once built. Vertices are 0..n-1.
/// Adjacency lists are kept sorted so has_edge is a binary search.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex n) : adj_(n) {}

  /// Builds a graph from an edge list. Rejects self-loops, duplicate edges
  /// (in either orientation) and out-of-range endpoints.
  static Graph from_edges(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges);
  static Graph from_edges(Vertex n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    return from_edges(n, std::span(edges.begin(), edges.size()));
  }

  Vertex order() const { return static_cast<Vertex>(adj_.size()); }
  std::size_t edge_count() const { return m_; }

  bool has_edge(Vertex u, Vertex v) const;
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

/// Induced subgraph together with the mapping back to original vertex ids:
/// vertex i of `graph` is `original_ids[i]` in the source graph.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original_ids;
};

/// G[S]. S may be given in any order; duplicates or out-of-range ids are
/// rejected. The mapping preserves the sorted order of S.
InducedSubgraph induced(const Graph& g, std::span<const Vertex> s);

}  // namespace hbip
