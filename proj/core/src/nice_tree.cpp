#include "hbip/nice_tree.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace hbip {

namespace {

bool is_subset(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Incremental builder: nodes get appended, parents fixed up as we go.
struct Builder {
  std::vector<NiceNode> nodes;

  int add(NodeKind kind, Vertex v, std::vector<Vertex> bag, int c1, int c2) {
    NiceNode node;
    node.kind = kind;
    node.vertex = v;
    node.bag = std::move(bag);
    node.child1 = c1;
    node.child2 = c2;
    const int id = static_cast<int>(nodes.size());
    if (c1 >= 0) nodes[static_cast<std::size_t>(c1)].parent = id;
    if (c2 >= 0) nodes[static_cast<std::size_t>(c2)].parent = id;
    nodes.push_back(std::move(node));
    return id;
  }

  // Empty leaf followed by introduces, ending with `target` as its bag.
  int grow_leaf(const std::vector<Vertex>& target) {
    int cur = add(NodeKind::kLeaf, 0, {}, -1, -1);
    std::vector<Vertex> bag;
    for (Vertex v : target) {
      bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
      cur = add(NodeKind::kIntroduce, v, bag, cur, -1);
    }
    return cur;
  }

  // Forget everything in `from` \ `to`, then introduce `to` \ `from`,
  // both in ascending vertex order. Returns the top node (bag == to).
  int transition(int cur, const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    std::vector<Vertex> bag = from;
    std::vector<Vertex> drop, gain;
    std::set_difference(from.begin(), from.end(), to.begin(), to.end(), std::back_inserter(drop));
    std::set_difference(to.begin(), to.end(), from.begin(), from.end(), std::back_inserter(gain));
    for (Vertex v : drop) {
      bag.erase(std::lower_bound(bag.begin(), bag.end(), v));
      cur = add(NodeKind::kForget, v, bag, cur, -1);
    }
    for (Vertex v : gain) {
      bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
      cur = add(NodeKind::kIntroduce, v, bag, cur, -1);
    }
    return cur;
  }
};

}  // namespace

NiceTreeDecomposition::NiceTreeDecomposition(std::vector<NiceNode> nodes, int root)
    : nodes_(std::move(nodes)), root_(root) {
  if (root_ < 0 || root_ >= static_cast<int>(nodes_.size())) {
    throw std::logic_error("nice decomposition root out of range");
  }
  post_order_.reserve(nodes_.size());
  // Iterative post-order; second visit emits the node.
  std::vector<std::pair<int, bool>> stack;
  stack.emplace_back(root_, false);
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    const NiceNode& nd = nodes_[static_cast<std::size_t>(id)];
    if (expanded) {
      post_order_.push_back(id);
      continue;
    }
    stack.emplace_back(id, true);
    if (nd.child2 >= 0) stack.emplace_back(nd.child2, false);
    if (nd.child1 >= 0) stack.emplace_back(nd.child1, false);
  }
}

int NiceTreeDecomposition::width() const {
  std::size_t largest = 0;
  for (const auto& nd : nodes_) largest = std::max(largest, nd.bag.size());
  return static_cast<int>(largest) - 1;
}

TreeDecomposition NiceTreeDecomposition::flatten() const {
  TreeDecomposition td;
  td.bags.reserve(nodes_.size());
  for (const auto& nd : nodes_) td.bags.push_back(nd.bag);
  for (int i = 0; i < size(); ++i) {
    const int p = nodes_[static_cast<std::size_t>(i)].parent;
    if (p >= 0) td.tree_edges.emplace_back(i, p);
  }
  return td;
}

NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& t) {
  (void)g;
  if (t.bags.empty()) throw InputError("cannot make an empty decomposition nice");
  const int k = static_cast<int>(t.bags.size());

  // --- Contract edges where one bag contains the other. The surviving bag
  // never changes, so only freshly rewired edges need rechecking.
  std::vector<std::vector<Vertex>> bags = t.bags;
  std::vector<std::set<int>> adj(static_cast<std::size_t>(k));
  for (auto [a, b] : t.tree_edges) {
    adj[static_cast<std::size_t>(a)].insert(b);
    adj[static_cast<std::size_t>(b)].insert(a);
  }
  std::vector<int> merged_into(static_cast<std::size_t>(k), -1);
  auto live = [&merged_into](int u) {
    while (merged_into[static_cast<std::size_t>(u)] >= 0) {
      u = merged_into[static_cast<std::size_t>(u)];
    }
    return u;
  };

  std::deque<std::pair<int, int>> work;
  {
    std::vector<std::pair<int, int>> initial = t.tree_edges;
    for (auto& [a, b] : initial) {
      if (a > b) std::swap(a, b);
    }
    std::sort(initial.begin(), initial.end());
    for (auto e : initial) work.push_back(e);
  }
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    a = live(a);
    b = live(b);
    if (a == b) continue;
    if (!adj[static_cast<std::size_t>(a)].count(b)) continue;
    int gone, kept;
    const auto& ba = bags[static_cast<std::size_t>(a)];
    const auto& bb = bags[static_cast<std::size_t>(b)];
    if (ba == bb) {
      kept = std::min(a, b);
      gone = std::max(a, b);
    } else if (is_subset(ba, bb)) {
      gone = a;
      kept = b;
    } else if (is_subset(bb, ba)) {
      gone = b;
      kept = a;
    } else {
      continue;
    }
    adj[static_cast<std::size_t>(gone)].erase(kept);
    adj[static_cast<std::size_t>(kept)].erase(gone);
    for (int w : adj[static_cast<std::size_t>(gone)]) {
      adj[static_cast<std::size_t>(w)].erase(gone);
      adj[static_cast<std::size_t>(w)].insert(kept);
      adj[static_cast<std::size_t>(kept)].insert(w);
      work.emplace_back(kept, w);
    }
    adj[static_cast<std::size_t>(gone)].clear();
    merged_into[static_cast<std::size_t>(gone)] = kept;
  }

  // --- Root the contracted tree at its smallest surviving index.
  int root_orig = -1;
  for (int u = 0; u < k; ++u) {
    if (merged_into[static_cast<std::size_t>(u)] < 0) {
      root_orig = u;
      break;
    }
  }

  std::vector<int> parent(static_cast<std::size_t>(k), -2);
  std::vector<std::vector<int>> children(static_cast<std::size_t>(k));
  std::vector<int> dfs_stack{root_orig};
  parent[static_cast<std::size_t>(root_orig)] = -1;
  std::vector<int> visit_order;
  while (!dfs_stack.empty()) {
    int u = dfs_stack.back();
    dfs_stack.pop_back();
    visit_order.push_back(u);
    for (int w : adj[static_cast<std::size_t>(u)]) {
      if (parent[static_cast<std::size_t>(w)] == -2) {
        parent[static_cast<std::size_t>(w)] = u;
        children[static_cast<std::size_t>(u)].push_back(w);
        dfs_stack.push_back(w);
      }
    }
  }

  // --- Emit nice nodes bottom-up over the rooted tree.
  Builder builder;
  std::vector<int> nice_root_of(static_cast<std::size_t>(k), -1);
  for (auto it = visit_order.rbegin(); it != visit_order.rend(); ++it) {
    const int u = *it;
    const auto& bag_u = bags[static_cast<std::size_t>(u)];
    std::vector<int> arms;
    for (int c : children[static_cast<std::size_t>(u)]) {
      const int sub = nice_root_of[static_cast<std::size_t>(c)];
      arms.push_back(builder.transition(sub, bags[static_cast<std::size_t>(c)], bag_u));
    }
    int top;
    if (arms.empty()) {
      top = builder.grow_leaf(bag_u);
    } else {
      // Balanced pairwise joins keep the tree depth logarithmic in the
      // number of children.
      while (arms.size() > 1) {
        std::vector<int> next;
        for (std::size_t i = 0; i + 1 < arms.size(); i += 2) {
          next.push_back(builder.add(NodeKind::kJoin, 0, bag_u, arms[i], arms[i + 1]));
        }
        if (arms.size() % 2 == 1) next.push_back(arms.back());
        arms = std::move(next);
      }
      top = arms[0];
    }
    nice_root_of[static_cast<std::size_t>(u)] = top;
  }

  // --- Forget the root bag down to nothing.
  int top = nice_root_of[static_cast<std::size_t>(root_orig)];
  top = builder.transition(top, bags[static_cast<std::size_t>(root_orig)], {});

  return NiceTreeDecomposition(std::move(builder.nodes), top);
}

ValidationReport validate_nice(const Graph& g, const NiceTreeDecomposition& nt) {
  ValidationReport report = validate(g, nt.flatten());
  auto structural = [&report](const std::string& msg) {
    report.issues.push_back({ValidationIssue::Kind::kNotATree, 0, 0, msg});
  };

  const int n = nt.size();
  if (nt.root() < 0 || nt.root() >= n) {
    structural("root index out of range");
    return report;
  }
  if (!nt.node(nt.root()).bag.empty()) structural("root bag is not empty");
  if (nt.node(nt.root()).parent != -1) structural("root has a parent");

  for (int i = 0; i < n; ++i) {
    const NiceNode& nd = nt.node(i);
    const std::string where = "node " + std::to_string(i);
    for (int c : {nd.child1, nd.child2}) {
      if (c == -1) continue;
      if (c < 0 || c >= n) {
        structural(where + " has a child index out of range");
      } else if (nt.node(c).parent != i) {
        structural(where + " child does not point back to it");
      }
    }
    switch (nd.kind) {
      case NodeKind::kLeaf:
        if (!nd.bag.empty()) structural(where + ": leaf bag is not empty");
        if (nd.child1 != -1 || nd.child2 != -1) structural(where + ": leaf has children");
        break;
      case NodeKind::kIntroduce: {
        if (nd.child1 < 0 || nd.child2 != -1) {
          structural(where + ": introduce needs exactly one child");
          break;
        }
        auto expect = nt.node(nd.child1).bag;
        if (std::binary_search(expect.begin(), expect.end(), nd.vertex)) {
          structural(where + ": introduced vertex already in child bag");
        }
        expect.insert(std::lower_bound(expect.begin(), expect.end(), nd.vertex), nd.vertex);
        if (expect != nd.bag) structural(where + ": bag is not child bag plus vertex");
        break;
      }
      case NodeKind::kForget: {
        if (nd.child1 < 0 || nd.child2 != -1) {
          structural(where + ": forget needs exactly one child");
          break;
        }
        auto expect = nt.node(nd.child1).bag;
        auto it = std::lower_bound(expect.begin(), expect.end(), nd.vertex);
        if (it == expect.end() || *it != nd.vertex) {
          structural(where + ": forgotten vertex missing from child bag");
          break;
        }
        expect.erase(it);
        if (expect != nd.bag) structural(where + ": bag is not child bag minus vertex");
        break;
      }
      case NodeKind::kJoin:
        if (nd.child1 < 0 || nd.child2 < 0) {
          structural(where + ": join needs two children");
          break;
        }
        if (nt.node(nd.child1).bag != nd.bag || nt.node(nd.child2).bag != nd.bag) {
          structural(where + ": join children bags differ from its own");
        }
        break;
    }
  }
  return report;
}

}  // namespace hbip
