#pragma once

#include <vector>

#include "hbip/decomposition.hpp"
#include "hbip/graph.hpp"

namespace hbip {

enum class NodeKind { kLeaf, kIntroduce, kForget, kJoin };

struct NiceNode {
  NodeKind kind = NodeKind::kLeaf;
  Vertex vertex = 0;         // the introduced / forgotten vertex, when applicable
  std::vector<Vertex> bag;   // sorted
  int child1 = -1;
  int child2 = -1;
  int parent = -1;
};

// A rooted decomposition where every node is one of four shapes: an empty
// leaf, an introduce node (child bag plus one vertex), a forget node (child
// bag minus one vertex), or a join node (two children with identical bags).
// The root bag is empty. This is the form the solvers walk.
class NiceTreeDecomposition {
 public:
  NiceTreeDecomposition(std::vector<NiceNode> nodes, int root);

  int size() const { return static_cast<int>(nodes_.size()); }
  int root() const { return root_; }
  const NiceNode& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }

  // Node indices ordered children-first; the root comes last.
  const std::vector<int>& post_order() const { return post_order_; }

  int width() const;

  // Forgets the rooted structure, for interoperability and validation.
  TreeDecomposition flatten() const;

 private:
  std::vector<NiceNode> nodes_;
  int root_;
  std::vector<int> post_order_;
};

// Rebuilds an arbitrary decomposition into nice form without increasing the
// width. Redundant bags (subset of a neighbour) are contracted first, so the
// node count stays linear in the input size.
NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& t);

// Checks the four node-shape rules, parent/child consistency, the empty root
// bag, and the underlying decomposition properties against g.
ValidationReport validate_nice(const Graph& g, const NiceTreeDecomposition& nt);

}  // namespace hbip
