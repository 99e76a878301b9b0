#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hbip/graph.hpp"
#include "hbip/pattern.hpp"

namespace hbip {

// The general solver tracks, per partition side, which partial placements of
// the pattern could still grow into a full copy. A Sequence records one such
// placement: slot ℓ names the graph vertex currently pinned to pattern
// position ℓ, kFg marks a position filled by an already-forgotten vertex,
// and kDc marks a position not filled yet.
inline constexpr int kMaxPatternSize = 8;
inline constexpr std::uint16_t kDc = 0xFFFF;
inline constexpr std::uint16_t kFg = 0xFFFE;
inline constexpr std::uint16_t kMaxSequenceVertex = 0xFFFD;

struct Sequence {
  std::array<std::uint16_t, kMaxPatternSize> slot;

  Sequence() { slot.fill(kDc); }

  std::uint16_t operator[](int i) const { return slot[static_cast<std::size_t>(i)]; }
  std::uint16_t& operator[](int i) { return slot[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Sequence& a, const Sequence& b) { return a.slot == b.slot; }
  friend bool operator<(const Sequence& a, const Sequence& b) { return a.slot < b.slot; }

  // Position of graph vertex v among the first r slots, or -1.
  int find(std::uint16_t v, int r) const {
    for (int i = 0; i < r; ++i) {
      if (slot[static_cast<std::size_t>(i)] == v) return i;
    }
    return -1;
  }
};

// True when no slot in 0..r-1 is kDc: the pattern is fully placed.
bool is_complete(const Sequence& s, int r);

// Bitmask over pattern positions whose slot is kFg.
std::uint32_t fg_mask(const Sequence& s, int r);

// A placement can only continue growing if no pattern edge joins a
// forgotten position to an unfilled one — vertices placed later can never
// touch a vertex that has already left the bag.
bool respects_forgotten(const Sequence& s, const PatternGraph& h);

// Combines placements from two subtrees that agree on the bag. Defined when
// every position pairs identical bag vertices, or one side forgotten with
// the other unfilled, or both unfilled; the two subtrees forget disjoint
// vertex sets, so forgotten/forgotten never matches.
std::optional<Sequence> merge_sequences(const Sequence& a, const Sequence& b, int r);

// All sequences over side ∪ {kFg, kDc} with pairwise-distinct side vertices
// that satisfy respects_forgotten. Exponential; meant for tests and
// cross-checks, not the solver path.
std::vector<Sequence> gamma(std::span<const Vertex> side, const PatternGraph& h);

// Sorted duplicate-free set of sequences; equality is structural.
class SequenceSet {
 public:
  SequenceSet() = default;
  explicit SequenceSet(std::vector<Sequence> items);

  bool contains(const Sequence& s) const;
  void insert(const Sequence& s);
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<Sequence>& items() const { return items_; }

  friend bool operator==(const SequenceSet& a, const SequenceSet& b) {
    return a.items_ == b.items_;
  }
  friend bool operator<(const SequenceSet& a, const SequenceSet& b) {
    return a.items_ < b.items_;
  }

 private:
  std::vector<Sequence> items_;
};

}  // namespace hbip
