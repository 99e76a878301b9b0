#pragma once

#include <span>

#include "hbip/graph.hpp"
#include "hbip/pattern.hpp"

namespace hbip {

enum class ContainmentVariant { kSubgraph, kInduced };

/// True iff G contains H as a (not necessarily induced) subgraph:
/// an injective map from H's vertices so every H-edge lands on a G-edge.
bool has_subgraph(const Graph& g, const PatternGraph& h);

/// True iff G contains H as an induced subgraph: H-edges map to G-edges
/// and H-non-edges map to G-non-edges.
bool has_induced_subgraph(const Graph& g, const PatternGraph& h);

bool contains(const Graph& g, const PatternGraph& h, ContainmentVariant variant);

/// True iff the part G[S] avoids H under the requested variant.
bool is_part_valid(const Graph& g, std::span<const Vertex> part, const PatternGraph& h,
                   ContainmentVariant variant);

/// True iff G contains a copy of H (under `variant`) that uses vertex `anchor`
/// and otherwise stays inside `allowed` (a sorted vertex list that includes
/// `anchor`). Used by the enumeration oracles for incremental pruning.
bool has_copy_through(const Graph& g, const PatternGraph& h, ContainmentVariant variant,
                      std::span<const Vertex> allowed, Vertex anchor);

}  // namespace hbip
