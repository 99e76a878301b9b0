#include "hbip/graph.hpp"

#include <algorithm>

namespace hbip {

Graph Graph::from_edges(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                       std::to_string(v) + ") with n = " + std::to_string(n));
    }
    if (u == v) {
      throw InputError("self-loop on vertex " + std::to_string(u));
    }
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& nb = g.adj_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw InputError("duplicate edge at vertex " + std::to_string(v));
    }
  }
  g.m_ = edges.size();
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= order() || v >= order() || u == v) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(m_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

InducedSubgraph induced(const Graph& g, std::span<const Vertex> s) {
  std::vector<Vertex> ids(s.begin(), s.end());
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw InputError("induced: duplicate vertex in selection");
  }
  if (!ids.empty() && ids.back() >= g.order()) {
    throw InputError("induced: vertex out of range");
  }
  std::vector<std::pair<Vertex, Vertex>> es;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (g.has_edge(ids[i], ids[j])) {
        es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  InducedSubgraph out;
  out.graph = Graph::from_edges(static_cast<Vertex>(ids.size()), es);
  out.original_ids = std::move(ids);
  return out;
}

}  // namespace hbip
