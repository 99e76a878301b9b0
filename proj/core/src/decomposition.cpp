#include "hbip/decomposition.hpp"

#include <algorithm>
#include <queue>

namespace hbip {

int width(const TreeDecomposition& t) {
  if (t.bags.empty()) throw InputError("width of an empty decomposition");
  std::size_t largest = 0;
  for (const auto& bag : t.bags) largest = std::max(largest, bag.size());
  return static_cast<int>(largest) - 1;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "valid";
  std::string out;
  for (const auto& issue : issues) {
    out += issue.message;
    out += '\n';
  }
  return out;
}

ValidationReport validate(const Graph& g, const TreeDecomposition& t) {
  ValidationReport report;
  auto add = [&report](ValidationIssue::Kind kind, Vertex a, Vertex b, std::string msg) {
    report.issues.push_back({kind, a, b, std::move(msg)});
  };

  const int k = static_cast<int>(t.bags.size());
  if (k == 0) {
    if (g.order() > 0) {
      add(ValidationIssue::Kind::kVertexNotCovered, 0, 0,
          "vertex 0 appears in no bag (decomposition has no bags)");
    }
    return report;
  }

  bool bags_ok = true;
  for (int i = 0; i < k; ++i) {
    const auto& bag = t.bags[static_cast<std::size_t>(i)];
    if (!std::is_sorted(bag.begin(), bag.end()) ||
        std::adjacent_find(bag.begin(), bag.end()) != bag.end() ||
        (!bag.empty() && bag.back() >= g.order())) {
      add(ValidationIssue::Kind::kNotATree, 0, 0,
          "bag " + std::to_string(i) + " is not a sorted duplicate-free vertex set in range");
      bags_ok = false;
    }
  }
  if (!bags_ok) return report;

  // Tree structure: indices in range, exactly k-1 edges, connected, acyclic.
  std::vector<std::vector<int>> tadj(static_cast<std::size_t>(k));
  bool structure_ok = true;
  for (auto [i, j] : t.tree_edges) {
    if (i < 0 || j < 0 || i >= k || j >= k || i == j) {
      add(ValidationIssue::Kind::kNotATree, 0, 0,
          "tree edge (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
      structure_ok = false;
      continue;
    }
    tadj[static_cast<std::size_t>(i)].push_back(j);
    tadj[static_cast<std::size_t>(j)].push_back(i);
  }
  if (structure_ok) {
    if (t.tree_edges.size() != static_cast<std::size_t>(k) - 1) {
      add(ValidationIssue::Kind::kNotATree, 0, 0,
          "bag tree has " + std::to_string(t.tree_edges.size()) + " edges, expected " +
              std::to_string(k - 1));
      structure_ok = false;
    } else {
      std::vector<bool> seen(static_cast<std::size_t>(k), false);
      std::queue<int> bfs;
      bfs.push(0);
      seen[0] = true;
      int reached = 1;
      while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (int v : tadj[static_cast<std::size_t>(u)]) {
          if (!seen[static_cast<std::size_t>(v)]) {
            seen[static_cast<std::size_t>(v)] = true;
            ++reached;
            bfs.push(v);
          }
        }
      }
      if (reached != k) {
        add(ValidationIssue::Kind::kNotATree, 0, 0, "bag tree is disconnected");
        structure_ok = false;
      }
    }
  }

  // Occurrence index: vertex -> sorted list of bags containing it.
  std::vector<std::vector<int>> occ(g.order());
  for (int i = 0; i < k; ++i) {
    for (Vertex v : t.bags[static_cast<std::size_t>(i)]) occ[v].push_back(i);
  }

  // Property 1: every vertex in some bag.
  for (Vertex v = 0; v < g.order(); ++v) {
    if (occ[v].empty()) {
      add(ValidationIssue::Kind::kVertexNotCovered, v, 0,
          "vertex " + std::to_string(v) + " appears in no bag");
    }
  }

  // Property 2: every edge inside some bag. Scan the endpoint with the
  // shorter occurrence list.
  auto bag_has = [&t](int i, Vertex v) {
    const auto& bag = t.bags[static_cast<std::size_t>(i)];
    return std::binary_search(bag.begin(), bag.end(), v);
  };
  for (auto [u, v] : g.edges()) {
    const auto& list = occ[u].size() <= occ[v].size() ? occ[u] : occ[v];
    const Vertex other = occ[u].size() <= occ[v].size() ? v : u;
    bool found = false;
    for (int i : list) {
      if (bag_has(i, other)) {
        found = true;
        break;
      }
    }
    if (!found) {
      add(ValidationIssue::Kind::kEdgeNotCovered, u, v,
          "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") inside no bag");
    }
  }

  // Property 3: occurrences of each vertex form a connected subtree.
  if (structure_ok) {
    std::vector<int> visit_mark(static_cast<std::size_t>(k), -1);
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto& bags_v = occ[v];
      if (bags_v.size() <= 1) continue;
      std::queue<int> bfs;
      bfs.push(bags_v.front());
      visit_mark[static_cast<std::size_t>(bags_v.front())] = static_cast<int>(v);
      std::size_t reached = 1;
      while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (int w : tadj[static_cast<std::size_t>(u)]) {
          if (visit_mark[static_cast<std::size_t>(w)] != static_cast<int>(v) && bag_has(w, v)) {
            visit_mark[static_cast<std::size_t>(w)] = static_cast<int>(v);
            ++reached;
            bfs.push(w);
          }
        }
      }
      if (reached != bags_v.size()) {
        add(ValidationIssue::Kind::kOccurrenceDisconnected, v, 0,
            "occurrences of vertex " + std::to_string(v) + " form a disconnected set");
      }
    }
  }

  return report;
}

}  // namespace hbip
