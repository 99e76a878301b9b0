#include "hbip/containment.hpp"

#include <algorithm>
#include <numeric>

namespace hbip {
namespace {

// Visit order for backtracking: start at a max-degree pattern vertex, then
// always pick an unvisited vertex with the most already-visited neighbors
// (connectivity first keeps candidate lists small).
std::vector<int> visit_order(const PatternGraph& h) {
  const int r = h.order();
  std::vector<int> order;
  std::vector<bool> placed(static_cast<std::size_t>(r), false);
  for (int step = 0; step < r; ++step) {
    int best = -1, best_back = -1, best_deg = -1;
    for (int a = 0; a < r; ++a) {
      if (placed[static_cast<std::size_t>(a)]) continue;
      int back = 0;
      for (int b : order) {
        if (h.has_edge(a, b)) ++back;
      }
      if (back > best_back || (back == best_back && h.degree(a) > best_deg)) {
        best = a;
        best_back = back;
        best_deg = h.degree(a);
      }
    }
    order.push_back(best);
    placed[static_cast<std::size_t>(best)] = true;
  }
  return order;
}

struct Mapper {
  const Graph& g;
  const PatternGraph& h;
  bool induced;
  std::span<const Vertex> pool;  // sorted candidates; empty span = all of G
  std::vector<int> order;
  std::vector<Vertex> image;     // pattern vertex -> graph vertex
  std::vector<bool> mapped;      // pattern vertex mapped yet?
  std::vector<bool> used;        // graph vertex used yet? (indexed by id)
  int forced_pattern_vertex = -1;
  Vertex forced_graph_vertex = 0;

  Mapper(const Graph& gg, const PatternGraph& hh, bool ind, std::span<const Vertex> p)
      : g(gg),
        h(hh),
        induced(ind),
        pool(p),
        order(visit_order(hh)),
        image(static_cast<std::size_t>(hh.order())),
        mapped(static_cast<std::size_t>(hh.order()), false),
        used(gg.order(), false) {}

  bool in_pool(Vertex x) const {
    if (pool.empty()) return true;
    return std::binary_search(pool.begin(), pool.end(), x);
  }

  bool consistent(int a, Vertex x) const {
    if (used[x]) return false;
    if (static_cast<std::size_t>(h.degree(a)) > g.degree(x)) return false;
    for (int b = 0; b < h.order(); ++b) {
      if (!mapped[static_cast<std::size_t>(b)]) continue;
      const bool he = h.has_edge(a, b);
      const bool ge = g.has_edge(x, image[static_cast<std::size_t>(b)]);
      if (he && !ge) return false;
      if (induced && !he && ge) return false;
    }
    return true;
  }

  bool place(int a, Vertex x, std::size_t depth) {
    image[static_cast<std::size_t>(a)] = x;
    mapped[static_cast<std::size_t>(a)] = true;
    used[x] = true;
    const bool ok = dfs(depth + 1);
    used[x] = false;
    mapped[static_cast<std::size_t>(a)] = false;
    return ok;
  }

  bool dfs(std::size_t depth) {
    if (depth == order.size()) return true;
    const int a = order[depth];
    if (a == forced_pattern_vertex) {
      const Vertex x = forced_graph_vertex;
      return in_pool(x) && consistent(a, x) && place(a, x, depth);
    }
    // Prefer extending from a mapped pattern neighbor: candidates are then
    // graph neighbors of its image.
    for (int b = 0; b < h.order(); ++b) {
      if (!mapped[static_cast<std::size_t>(b)] || !h.has_edge(a, b)) continue;
      for (Vertex x : g.neighbors(image[static_cast<std::size_t>(b)])) {
        if (!in_pool(x)) continue;
        if (consistent(a, x) && place(a, x, depth)) return true;
      }
      return false;
    }
    if (!pool.empty()) {
      for (Vertex x : pool) {
        if (consistent(a, x) && place(a, x, depth)) return true;
      }
    } else {
      for (Vertex x = 0; x < g.order(); ++x) {
        if (consistent(a, x) && place(a, x, depth)) return true;
      }
    }
    return false;
  }
};

bool search(const Graph& g, const PatternGraph& h, bool induced,
            std::span<const Vertex> pool, int forced_a, Vertex forced_x) {
  if (g.order() < static_cast<Vertex>(h.order())) return false;
  if (!pool.empty() && pool.size() < static_cast<std::size_t>(h.order())) return false;
  Mapper m(g, h, induced, pool);
  m.forced_pattern_vertex = forced_a;
  m.forced_graph_vertex = forced_x;
  return m.dfs(0);
}

}  // namespace

bool has_subgraph(const Graph& g, const PatternGraph& h) {
  return search(g, h, /*induced=*/false, {}, -1, 0);
}

bool has_induced_subgraph(const Graph& g, const PatternGraph& h) {
  return search(g, h, /*induced=*/true, {}, -1, 0);
}

bool contains(const Graph& g, const PatternGraph& h, ContainmentVariant variant) {
  return search(g, h, variant == ContainmentVariant::kInduced, {}, -1, 0);
}

bool is_part_valid(const Graph& g, std::span<const Vertex> part, const PatternGraph& h,
                   ContainmentVariant variant) {
  std::vector<Vertex> sorted(part.begin(), part.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() < static_cast<std::size_t>(h.order())) return true;
  return !search(g, h, variant == ContainmentVariant::kInduced, sorted, -1, 0);
}

bool has_copy_through(const Graph& g, const PatternGraph& h, ContainmentVariant variant,
                      std::span<const Vertex> allowed, Vertex anchor) {
  const bool induced = variant == ContainmentVariant::kInduced;
  for (int a = 0; a < h.order(); ++a) {
    if (search(g, h, induced, allowed, a, anchor)) return true;
  }
  return false;
}

}  // namespace hbip
