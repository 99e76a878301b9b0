#include "hbip/sequence.hpp"

#include <algorithm>

namespace hbip {

bool is_complete(const Sequence& s, int r) {
  for (int i = 0; i < r; ++i) {
    if (s[i] == kDc) return false;
  }
  return true;
}

std::uint32_t fg_mask(const Sequence& s, int r) {
  std::uint32_t mask = 0;
  for (int i = 0; i < r; ++i) {
    if (s[i] == kFg) mask |= 1u << i;
  }
  return mask;
}

bool respects_forgotten(const Sequence& s, const PatternGraph& h) {
  const int r = h.order();
  for (int i = 0; i < r; ++i) {
    if (s[i] != kFg) continue;
    const std::uint64_t nbrs = h.adjacency_mask(i);
    for (int j = 0; j < r; ++j) {
      if (s[j] == kDc && (nbrs >> j & 1)) return false;
    }
  }
  return true;
}

std::optional<Sequence> merge_sequences(const Sequence& a, const Sequence& b, int r) {
  Sequence out;
  for (int i = 0; i < r; ++i) {
    const std::uint16_t x = a[i], y = b[i];
    if (x == y) {
      if (x == kFg) return std::nullopt;
      out[i] = x;
    } else if (x == kFg && y == kDc) {
      out[i] = kFg;
    } else if (x == kDc && y == kFg) {
      out[i] = kFg;
    } else {
      return std::nullopt;
    }
  }
  return out;
}

std::vector<Sequence> gamma(std::span<const Vertex> side, const PatternGraph& h) {
  const int r = h.order();
  std::vector<Sequence> out;
  Sequence cur;
  std::vector<bool> used(side.size(), false);

  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == r) {
      if (respects_forgotten(cur, h)) out.push_back(cur);
      return;
    }
    cur[pos] = kDc;
    self(self, pos + 1);
    cur[pos] = kFg;
    self(self, pos + 1);
    for (std::size_t i = 0; i < side.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      cur[pos] = static_cast<std::uint16_t>(side[i]);
      self(self, pos + 1);
      used[i] = false;
    }
    cur[pos] = kDc;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

SequenceSet::SequenceSet(std::vector<Sequence> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool SequenceSet::contains(const Sequence& s) const {
  return std::binary_search(items_.begin(), items_.end(), s);
}

void SequenceSet::insert(const Sequence& s) {
  auto it = std::lower_bound(items_.begin(), items_.end(), s);
  if (it == items_.end() || !(*it == s)) items_.insert(it, s);
}

}  // namespace hbip
