#pragma once

#include <string>
#include <vector>

#include "hbip/graph.hpp"

namespace hbip {

/// Tree decomposition: a set of bags plus a tree over bag indices.
/// Bags are kept sorted. A single-bag decomposition has no tree edges.
struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<int, int>> tree_edges;
};

/// Width = max bag size - 1. Throws InputError when there are no bags.
int width(const TreeDecomposition& t);

struct ValidationIssue {
  enum class Kind {
    kNotATree,                // bad index, cycle, or disconnected bag graph
    kVertexNotCovered,        // witness: a
    kEdgeNotCovered,          // witness: a, b
    kOccurrenceDisconnected,  // witness: a
  };
  Kind kind;
  Vertex a = 0;
  Vertex b = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string to_string() const;
};

/// Checks all three decomposition properties (every vertex in some bag, every
/// edge inside some bag, occurrences of each vertex form a connected subtree)
/// plus tree-structure sanity. Lists every violation with a witness.
ValidationReport validate(const Graph& g, const TreeDecomposition& t);

}  // namespace hbip
