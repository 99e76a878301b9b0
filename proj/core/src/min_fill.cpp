#include "hbip/min_fill.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>
#include <tuple>
#include <unordered_set>
#include <vector>

namespace hbip {

namespace {

struct HeapEntry {
  std::uint64_t fill;
  std::uint32_t rank;
  Vertex v;
  std::uint32_t stamp;
  bool operator>(const HeapEntry& o) const {
    return std::tie(fill, rank, v) > std::tie(o.fill, o.rank, o.v);
  }
};

}  // namespace

TreeDecomposition heuristic_decomposition(const Graph& g, std::uint64_t seed) {
  const Vertex n = g.order();
  TreeDecomposition td;
  if (n == 0) {
    td.bags.push_back({});
    return td;
  }

  // Tie-break ranking: identity for seed 0, a seeded shuffle otherwise.
  std::vector<std::uint32_t> rank(n);
  std::iota(rank.begin(), rank.end(), 0u);
  if (seed != 0) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (Vertex i = 0; i < n; ++i) rank[perm[i]] = i;
  }

  // Mutable adjacency over active vertices; fill edges get added as we go.
  std::vector<std::unordered_set<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto nbrs = g.neighbors(v);
    adj[v].insert(nbrs.begin(), nbrs.end());
  }

  auto count_fill = [&adj](Vertex v) {
    std::uint64_t missing = 0;
    const auto& nv = adj[v];
    std::vector<Vertex> nbr(nv.begin(), nv.end());
    for (std::size_t i = 0; i < nbr.size(); ++i) {
      for (std::size_t j = i + 1; j < nbr.size(); ++j) {
        if (!adj[nbr[i]].count(nbr[j])) ++missing;
      }
    }
    return missing;
  };

  std::vector<std::uint32_t> stamp(n, 0);
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<HeapEntry>> heap;
  for (Vertex v = 0; v < n; ++v) heap.push({count_fill(v), rank[v], v, 0});

  std::vector<bool> eliminated(n, false);
  std::vector<int> elim_pos(n, -1);
  std::vector<Vertex> order;
  order.reserve(n);
  td.bags.reserve(n);

  std::vector<bool> dirty(n, false);
  std::vector<Vertex> touched;

  for (Vertex step = 0; step < n; ++step) {
    // Pop until we find a live, up-to-date entry; recompute lazily.
    Vertex v = 0;
    for (;;) {
      if (heap.empty()) throw std::logic_error("elimination heap exhausted early");
      HeapEntry top = heap.top();
      heap.pop();
      if (eliminated[top.v] || top.stamp != stamp[top.v]) continue;
      v = top.v;
      break;
    }

    eliminated[v] = true;
    elim_pos[v] = static_cast<int>(step);
    order.push_back(v);

    std::vector<Vertex> bag(adj[v].begin(), adj[v].end());
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.bags.push_back(std::move(bag));

    // Turn N(v) into a clique, drop v, and mark whose fill count changed:
    // every neighbour of v, plus common neighbours of newly joined pairs.
    std::vector<Vertex> nbr(adj[v].begin(), adj[v].end());
    touched.clear();
    auto touch = [&](Vertex u) {
      if (!dirty[u]) {
        dirty[u] = true;
        touched.push_back(u);
      }
    };
    for (Vertex u : nbr) {
      adj[u].erase(v);
      touch(u);
    }
    for (std::size_t i = 0; i < nbr.size(); ++i) {
      for (std::size_t j = i + 1; j < nbr.size(); ++j) {
        Vertex a = nbr[i], b = nbr[j];
        if (adj[a].count(b)) continue;
        adj[a].insert(b);
        adj[b].insert(a);
        const auto& small = adj[a].size() <= adj[b].size() ? adj[a] : adj[b];
        const auto& big = adj[a].size() <= adj[b].size() ? adj[b] : adj[a];
        for (Vertex w : small) {
          if (w != a && w != b && big.count(w)) touch(w);
        }
      }
    }
    adj[v].clear();
    for (Vertex u : touched) {
      dirty[u] = false;
      if (eliminated[u]) continue;
      ++stamp[u];
      heap.push({count_fill(u), rank[u], u, stamp[u]});
    }
  }

  // Bag i belongs to the i-th eliminated vertex. Attach it below the bag of
  // the earliest-eliminated vertex among the rest of the bag; a bag holding
  // only its own vertex hangs off the next bag in elimination order.
  for (Vertex step = 0; step + 1 < n; ++step) {
    const auto& bag = td.bags[step];
    const Vertex own = order[step];
    int parent = -1;
    for (Vertex u : bag) {
      if (u == own) continue;
      if (parent < 0 || elim_pos[u] < parent) parent = elim_pos[u];
    }
    if (parent < 0) parent = static_cast<int>(step) + 1;
    td.tree_edges.emplace_back(static_cast<int>(step), parent);
  }

  auto report = validate(g, td);
  if (!report.ok()) {
    throw std::logic_error("heuristic decomposition failed validation:\n" + report.to_string());
  }
  return td;
}

}  // namespace hbip
