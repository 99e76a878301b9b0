#pragma once

// Internal: the per-part table payloads and transition rules for the three
// engines, shared by the two-part and q-part walks (see dp_core.hpp for the
// Policy contract).

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hbip/containment.hpp"
#include "hbip/graph.hpp"
#include "hbip/pattern.hpp"
#include "hbip/sequence.hpp"

namespace hbip::detail {

struct Unit {
  friend bool operator==(const Unit&, const Unit&) { return true; }
  friend bool operator<(const Unit&, const Unit&) { return false; }
};

// A clique always sits inside some bag, so it is fully checkable the moment
// its last vertex is introduced: reject placing v into a part whose bag
// vertices adjacent to v contain a clique on r-1 vertices. Nothing needs
// tracking across forgets or joins.
struct CliquePolicy {
  using Aux = Unit;
  const Graph* g;
  int r;

  Aux leaf() const { return {}; }

  bool introduce(std::span<const Vertex> side, Vertex v, const Aux&, Aux&) const {
    std::vector<Vertex> cand;
    cand.reserve(side.size());
    for (Vertex u : side) {
      if (g->has_edge(u, v)) cand.push_back(u);
    }
    return !has_clique(cand, r - 1);
  }

  bool forget(std::span<const Vertex>, Vertex, const Aux&, Aux&) const { return true; }

  bool join(std::span<const Vertex>, const Aux&, const Aux&, Aux&) const { return true; }

 private:
  bool has_clique(const std::vector<Vertex>& cand, int need) const {
    if (need <= 0) return true;
    std::vector<Vertex> chosen;
    chosen.reserve(static_cast<std::size_t>(need));
    return extend(cand, 0, need, chosen);
  }

  bool extend(const std::vector<Vertex>& cand, std::size_t start, int need,
              std::vector<Vertex>& chosen) const {
    if (need == 0) return true;
    for (std::size_t i = start; i + static_cast<std::size_t>(need) <= cand.size(); ++i) {
      bool ok = true;
      for (Vertex w : chosen) {
        if (!g->has_edge(w, cand[i])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(cand[i]);
      if (extend(cand, i + 1, need - 1, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

// A 4-cycle x–v–y–z closes when the second common neighbour of an opposite
// pair {x,y} appears. Within the bag that is directly visible; common
// neighbours that have already been forgotten are remembered per pair. A
// valid part never gives a pair two departed common neighbours, so a sorted
// pair list with "exactly one" semantics suffices.
struct C4Policy {
  using Aux = std::vector<std::pair<Vertex, Vertex>>;
  const Graph* g;

  Aux leaf() const { return {}; }

  bool introduce(std::span<const Vertex> side, Vertex v, const Aux& in, Aux& out) const {
    std::vector<Vertex> nv = side_neighbors(side, v);
    for (std::size_t i = 0; i < nv.size(); ++i) {
      for (std::size_t j = i + 1; j < nv.size(); ++j) {
        // v is a fresh common neighbour of {x,y}; one more, departed or
        // in-bag, completes a 4-cycle.
        if (std::binary_search(in.begin(), in.end(), std::make_pair(nv[i], nv[j]))) return false;
        if (common_bag_neighbor(side, nv[i], nv[j])) return false;
      }
    }
    out = in;
    return true;
  }

  bool forget(std::span<const Vertex> side, Vertex v, const Aux& in, Aux& out) const {
    std::vector<Vertex> nv = side_neighbors(side, v);
    Aux fresh;
    for (std::size_t i = 0; i < nv.size(); ++i) {
      for (std::size_t j = i + 1; j < nv.size(); ++j) {
        const auto p = std::make_pair(nv[i], nv[j]);
        if (std::binary_search(in.begin(), in.end(), p)) return false;
        if (common_bag_neighbor(side, p.first, p.second)) return false;
        fresh.push_back(p);
      }
    }
    // Pairs that include v can never gain another common neighbour: later
    // vertices are not adjacent to departed ones. Drop them, keep the rest,
    // add the pairs that now share v.
    Aux kept;
    kept.reserve(in.size());
    for (const auto& p : in) {
      if (p.first != v && p.second != v) kept.push_back(p);
    }
    out.clear();
    std::set_union(kept.begin(), kept.end(), fresh.begin(), fresh.end(), std::back_inserter(out));
    return true;
  }

  bool join(std::span<const Vertex>, const Aux& x, const Aux& y, Aux& out) const {
    // The two subtrees forget disjoint vertex sets; a pair tracked on both
    // sides has two distinct departed common neighbours.
    auto ix = x.begin();
    auto iy = y.begin();
    while (ix != x.end() && iy != y.end()) {
      if (*ix < *iy) {
        ++ix;
      } else if (*iy < *ix) {
        ++iy;
      } else {
        return false;
      }
    }
    out.clear();
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return true;
  }

 private:
  std::vector<Vertex> side_neighbors(std::span<const Vertex> side, Vertex v) const {
    std::vector<Vertex> nv;
    nv.reserve(side.size());
    for (Vertex u : side) {
      if (g->has_edge(u, v)) nv.push_back(u);
    }
    return nv;
  }

  bool common_bag_neighbor(std::span<const Vertex> side, Vertex x, Vertex y) const {
    for (Vertex z : side) {
      if (z != x && z != y && g->has_edge(z, x) && g->has_edge(z, y)) return true;
    }
    return false;
  }
};

// Per part, the table payload is the exact set of partial placements of the
// pattern that a valid split of the processed vertices leaves open. A
// placement names, per pattern position, the bag vertex pinned there, a
// marker for a departed witness, or a marker for "not placed yet". The part
// dies the moment any placement covers every position.
struct GeneralPolicy {
  using Aux = SequenceSet;
  const Graph* g;
  const PatternGraph* h;
  ContainmentVariant variant;
  int r;

  Aux leaf() const { return SequenceSet({Sequence{}}); }

  bool introduce(std::span<const Vertex>, Vertex v, const Aux& in, Aux& out) const {
    std::vector<Sequence> items(in.begin(), in.end());
    for (const Sequence& s : in) {
      const std::uint32_t departed = fg_mask(s, r);
      for (int pos = 0; pos < r; ++pos) {
        if (s[pos] != kDc) continue;
        // A departed pattern-neighbour can never be adjacent to v in g.
        if (h->adjacency_mask(pos) & departed) continue;
        if (!placeable(s, pos, v)) continue;
        Sequence t = s;
        t[pos] = static_cast<std::uint16_t>(v);
        if (is_complete(t, r)) return false;  // the pattern closed inside this part
        items.push_back(t);
      }
    }
    out = SequenceSet(std::move(items));
    return true;
  }

  bool forget(std::span<const Vertex>, Vertex v, const Aux& in, Aux& out) const {
    std::vector<Sequence> items;
    items.reserve(in.size());
    for (const Sequence& s : in) {
      const int pos = s.find(static_cast<std::uint16_t>(v), r);
      if (pos < 0) {
        items.push_back(s);
        continue;
      }
      Sequence t = s;
      t[pos] = kFg;
      // Placements whose unfilled positions now require an edge to the
      // departed vertex can never complete; drop them.
      if (respects_forgotten(t, *h)) items.push_back(t);
    }
    out = SequenceSet(std::move(items));
    return true;
  }

  bool join(std::span<const Vertex>, const Aux& x, const Aux& y, Aux& out) const {
    std::vector<Sequence> items;
    for (const Sequence& s1 : x) {
      for (const Sequence& s2 : y) {
        auto merged = merge_sequences(s1, s2, r);
        if (!merged) continue;
        if (is_complete(*merged, r)) return false;
        items.push_back(*merged);
      }
    }
    out = SequenceSet(std::move(items));
    return true;
  }

 private:
  // Can v take pattern position pos given the vertices already pinned?
  bool placeable(const Sequence& s, int pos, Vertex v) const {
    for (int j = 0; j < r; ++j) {
      if (j == pos) continue;
      const std::uint16_t u = s[j];
      if (u > kMaxSequenceVertex) continue;  // unfilled or departed
      const bool he = h->has_edge(pos, j);
      const bool ge = g->has_edge(v, static_cast<Vertex>(u));
      if (variant == ContainmentVariant::kSubgraph ? (he && !ge) : (he != ge)) return false;
    }
    return true;
  }
};

}  // namespace hbip::detail
