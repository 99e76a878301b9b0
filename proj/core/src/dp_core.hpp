#pragma once

// Internal: the table walk over a nice decomposition shared by the three
// solvers, in two-part and q-part flavours. A Policy supplies the per-side
// payload plus accept/reject logic for the four node shapes:
//
//   struct Policy {
//     using Aux = ...;  // ordered + equality-comparable payload per side
//     Aux leaf() const;
//     bool introduce(std::span<const Vertex> side, Vertex v, const Aux& in, Aux& out) const;
//     bool forget(std::span<const Vertex> side, Vertex v, const Aux& in, Aux& out) const;
//     bool join(std::span<const Vertex> side, const Aux& x, const Aux& y, Aux& out) const;
//   };
//
// `side` holds the bag vertices currently in the affected part: for
// introduce, before v is added; for forget, after v is removed. Returning
// false rejects the candidate state (the part would contain the pattern).

#include <algorithm>
#include <condition_variable>
#include <cstdint>
#include <mutex>
#include <span>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "hbip/graph.hpp"
#include "hbip/nice_tree.hpp"
#include "hbip/solver_types.hpp"

namespace hbip::detail {

// Bag-position masks live in 32 bits; keep one bit of slack for shifts.
inline constexpr int kEngineBagLimit = 30;

// Applies the width gate shared by the solvers: the decomposition width must
// stay within the requested (or engine-default) cap, itself clamped to what
// the bit-mask representation supports. Fills d and returns true on refusal.
inline bool width_refused(const NiceTreeDecomposition& nt, const SolveOptions& opts,
                          int engine_default, Decision& d) {
  const int width = nt.width();
  int cap = opts.width_cap >= 0 ? opts.width_cap : engine_default;
  cap = std::min(cap, kEngineBagLimit);
  if (width > cap) {
    d.outcome = Outcome::kRefused;
    d.diagnostic = "decomposition width " + std::to_string(width) + " exceeds cap " +
                   std::to_string(cap) + "; raise the cap to proceed";
    return true;
  }
  return false;
}

// Turns a per-vertex side flag into a two-part certificate. A decision can
// be reached with one side empty; since any subset of a pattern-free set is
// pattern-free, moving the smallest vertex across keeps both sides valid.
inline Bipartition make_bipartition(const std::vector<std::uint8_t>& in_a) {
  Bipartition parts;
  for (Vertex v = 0; v < in_a.size(); ++v) {
    (in_a[v] ? parts.a : parts.b).push_back(v);
  }
  if (parts.a.empty() && !parts.b.empty()) {
    parts.a.push_back(parts.b.front());
    parts.b.erase(parts.b.begin());
  } else if (parts.b.empty() && !parts.a.empty()) {
    parts.b.push_back(parts.a.front());
    parts.a.erase(parts.a.begin());
  }
  return parts;
}

inline std::uint32_t insert_bit(std::uint32_t mask, int pos, bool set) {
  const std::uint32_t low = mask & ((1u << pos) - 1u);
  const std::uint32_t high = (mask >> pos) << (pos + 1);
  return low | high | (set ? 1u << pos : 0u);
}

inline std::uint32_t remove_bit(std::uint32_t mask, int pos) {
  const std::uint32_t low = mask & ((1u << pos) - 1u);
  const std::uint32_t high = (mask >> (pos + 1)) << pos;
  return low | high;
}

inline int bag_position(const std::vector<Vertex>& bag, Vertex v) {
  return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

// Bag vertices whose mask bit matches `ones`.
inline std::vector<Vertex> mask_vertices(const std::vector<Vertex>& bag, std::uint32_t mask,
                                         bool ones) {
  std::vector<Vertex> out;
  out.reserve(bag.size());
  for (std::size_t i = 0; i < bag.size(); ++i) {
    if (((mask >> i) & 1u) == (ones ? 1u : 0u)) out.push_back(bag[i]);
  }
  return out;
}

// Runs fn(node) once per node, children strictly before parents. With
// more than one thread, independent subtrees are processed concurrently;
// per-node results do not depend on the schedule.
template <class Fn>
void run_over_tree(const NiceTreeDecomposition& nt, int threads, Fn&& fn) {
  const auto& order = nt.post_order();
  if (threads <= 1) {
    for (int id : order) fn(id);
    return;
  }

  const int n = nt.size();
  std::vector<int> pending(static_cast<std::size_t>(n), 0);
  std::vector<int> ready;
  for (int id = 0; id < n; ++id) {
    const NiceNode& nd = nt.node(id);
    pending[static_cast<std::size_t>(id)] = (nd.child1 >= 0) + (nd.child2 >= 0);
    if (pending[static_cast<std::size_t>(id)] == 0) ready.push_back(id);
  }

  std::mutex mu;
  std::condition_variable cv;
  int remaining = n;
  std::exception_ptr failure;

  auto worker = [&] {
    std::unique_lock<std::mutex> lock(mu);
    for (;;) {
      cv.wait(lock, [&] { return !ready.empty() || remaining == 0 || failure; });
      if (failure || remaining == 0) return;
      const int id = ready.back();
      ready.pop_back();
      lock.unlock();
      try {
        fn(id);
      } catch (...) {
        lock.lock();
        if (!failure) failure = std::current_exception();
        cv.notify_all();
        return;
      }
      lock.lock();
      --remaining;
      const int parent = nt.node(id).parent;
      if (parent >= 0 && --pending[static_cast<std::size_t>(parent)] == 0) {
        ready.push_back(parent);
      }
      cv.notify_all();
      if (remaining == 0) return;
    }
  };

  const int pool = std::min<int>(threads, std::max(1, n));
  std::vector<std::thread> team;
  team.reserve(static_cast<std::size_t>(pool));
  for (int i = 0; i < pool; ++i) team.emplace_back(worker);
  for (auto& t : team) t.join();
  if (failure) std::rethrow_exception(failure);
}

// ---------------------------------------------------------------------------
// Two-part engine.

template <class Policy>
class BipartitionEngine {
 public:
  using Aux = typename Policy::Aux;

  struct State {
    std::uint32_t a_mask = 0;  // bit i: bag[i] lies in part A
    Aux a{};
    Aux b{};
    std::int32_t c1 = -1;  // index into child table(s), for replay
    std::int32_t c2 = -1;
  };

  BipartitionEngine(const NiceTreeDecomposition& nt, Policy policy)
      : nt_(nt), policy_(std::move(policy)), tables_(static_cast<std::size_t>(nt.size())) {}

  bool run(int threads) {
    run_over_tree(nt_, threads, [this](int id) { process(id); });
    return !tables_[static_cast<std::size_t>(nt_.root())].empty();
  }

  std::size_t peak_states() const { return peak_; }
  const std::vector<State>& table(int node) const {
    return tables_[static_cast<std::size_t>(node)];
  }

  // Follows provenance from the first root state; entry v is 1 when v lies
  // in part A. Only valid after run() returned true.
  std::vector<std::uint8_t> replay(Vertex n) const {
    std::vector<std::uint8_t> in_a(n, 0);
    std::vector<std::pair<int, std::int32_t>> stack{{nt_.root(), 0}};
    while (!stack.empty()) {
      auto [id, sidx] = stack.back();
      stack.pop_back();
      const NiceNode& nd = nt_.node(id);
      const State& s = tables_[static_cast<std::size_t>(id)][static_cast<std::size_t>(sidx)];
      switch (nd.kind) {
        case NodeKind::kLeaf:
          break;
        case NodeKind::kIntroduce: {
          const int pos = bag_position(nd.bag, nd.vertex);
          in_a[nd.vertex] = static_cast<std::uint8_t>((s.a_mask >> pos) & 1u);
          stack.emplace_back(nd.child1, s.c1);
          break;
        }
        case NodeKind::kForget:
          stack.emplace_back(nd.child1, s.c1);
          break;
        case NodeKind::kJoin:
          stack.emplace_back(nd.child1, s.c1);
          stack.emplace_back(nd.child2, s.c2);
          break;
      }
    }
    return in_a;
  }

 private:
  void process(int id) {
    const NiceNode& nd = nt_.node(id);
    std::vector<State>& out = tables_[static_cast<std::size_t>(id)];
    switch (nd.kind) {
      case NodeKind::kLeaf: {
        State s;
        s.a = policy_.leaf();
        s.b = policy_.leaf();
        out.push_back(std::move(s));
        break;
      }
      case NodeKind::kIntroduce: {
        const NiceNode& child = nt_.node(nd.child1);
        const int pos = bag_position(nd.bag, nd.vertex);
        const auto& in = tables_[static_cast<std::size_t>(nd.child1)];
        for (std::size_t i = 0; i < in.size(); ++i) {
          const State& s = in[i];
          const auto side_a = mask_vertices(child.bag, s.a_mask, true);
          const auto side_b = mask_vertices(child.bag, s.a_mask, false);
          State t;
          t.a = {};
          if (policy_.introduce(side_a, nd.vertex, s.a, t.a)) {
            t.a_mask = insert_bit(s.a_mask, pos, true);
            t.b = s.b;
            t.c1 = static_cast<std::int32_t>(i);
            out.push_back(std::move(t));
            t = State{};
          }
          t.b = {};
          if (policy_.introduce(side_b, nd.vertex, s.b, t.b)) {
            t.a_mask = insert_bit(s.a_mask, pos, false);
            t.a = s.a;
            t.c1 = static_cast<std::int32_t>(i);
            out.push_back(std::move(t));
          }
        }
        break;
      }
      case NodeKind::kForget: {
        const NiceNode& child = nt_.node(nd.child1);
        const int pos = bag_position(child.bag, nd.vertex);
        const auto& in = tables_[static_cast<std::size_t>(nd.child1)];
        for (std::size_t i = 0; i < in.size(); ++i) {
          const State& s = in[i];
          const bool was_a = (s.a_mask >> pos) & 1u;
          State t;
          t.a_mask = remove_bit(s.a_mask, pos);
          const auto side = mask_vertices(nd.bag, t.a_mask, was_a);
          bool ok;
          if (was_a) {
            t.b = s.b;
            ok = policy_.forget(side, nd.vertex, s.a, t.a);
          } else {
            t.a = s.a;
            ok = policy_.forget(side, nd.vertex, s.b, t.b);
          }
          if (ok) {
            t.c1 = static_cast<std::int32_t>(i);
            out.push_back(std::move(t));
          }
        }
        break;
      }
      case NodeKind::kJoin: {
        const auto& t1 = tables_[static_cast<std::size_t>(nd.child1)];
        const auto& t2 = tables_[static_cast<std::size_t>(nd.child2)];
        // Both tables are sorted with a_mask leading; sweep equal-mask runs.
        std::size_t i = 0, j = 0;
        while (i < t1.size() && j < t2.size()) {
          if (t1[i].a_mask < t2[j].a_mask) {
            ++i;
            continue;
          }
          if (t2[j].a_mask < t1[i].a_mask) {
            ++j;
            continue;
          }
          const std::uint32_t mask = t1[i].a_mask;
          std::size_t i_end = i, j_end = j;
          while (i_end < t1.size() && t1[i_end].a_mask == mask) ++i_end;
          while (j_end < t2.size() && t2[j_end].a_mask == mask) ++j_end;
          const auto side_a = mask_vertices(nd.bag, mask, true);
          const auto side_b = mask_vertices(nd.bag, mask, false);
          for (std::size_t x = i; x < i_end; ++x) {
            for (std::size_t y = j; y < j_end; ++y) {
              State t;
              t.a_mask = mask;
              if (!policy_.join(side_a, t1[x].a, t2[y].a, t.a)) continue;
              if (!policy_.join(side_b, t1[x].b, t2[y].b, t.b)) continue;
              t.c1 = static_cast<std::int32_t>(x);
              t.c2 = static_cast<std::int32_t>(y);
              out.push_back(std::move(t));
            }
          }
          i = i_end;
          j = j_end;
        }
        break;
      }
    }

    std::sort(out.begin(), out.end(), [](const State& x, const State& y) {
      return std::tie(x.a_mask, x.a, x.b, x.c1, x.c2) < std::tie(y.a_mask, y.a, y.b, y.c1, y.c2);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const State& x, const State& y) {
                            return x.a_mask == y.a_mask && x.a == y.a && x.b == y.b;
                          }),
              out.end());

    std::lock_guard<std::mutex> lock(peak_mu_);
    peak_ = std::max(peak_, out.size());
  }

  const NiceTreeDecomposition& nt_;
  Policy policy_;
  std::vector<std::vector<State>> tables_;
  std::mutex peak_mu_;
  std::size_t peak_ = 0;
};

// ---------------------------------------------------------------------------
// q-part engine. Parts are anonymous: slots are kept canonically sorted so
// label permutations collapse into one state.

template <class Policy>
class QPartitionEngine {
 public:
  using Aux = typename Policy::Aux;

  struct Slot {
    std::uint32_t mask = 0;
    Aux aux{};
    friend bool operator==(const Slot& x, const Slot& y) {
      return x.mask == y.mask && x.aux == y.aux;
    }
    friend bool operator<(const Slot& x, const Slot& y) {
      return std::tie(x.mask, x.aux) < std::tie(y.mask, y.aux);
    }
  };

  struct State {
    std::vector<Slot> slots;  // size q, sorted
    std::int32_t c1 = -1;
    std::int32_t c2 = -1;
    std::vector<std::uint8_t> perm1;  // out slot i came from child1 slot perm1[i]
    std::vector<std::uint8_t> perm2;
  };

  QPartitionEngine(const NiceTreeDecomposition& nt, Policy policy, int q)
      : nt_(nt), policy_(std::move(policy)), q_(q),
        tables_(static_cast<std::size_t>(nt.size())) {
    if (q_ < 1 || q_ > 32) throw std::invalid_argument("part count out of range");
  }

  bool run(int threads) {
    run_over_tree(nt_, threads, [this](int id) { process(id); });
    return !tables_[static_cast<std::size_t>(nt_.root())].empty();
  }

  std::size_t peak_states() const { return peak_; }

  // Part index per vertex from the first root state; valid after run().
  std::vector<int> replay(Vertex n) const {
    std::vector<int> part(n, -1);
    std::vector<std::uint8_t> root_labels(static_cast<std::size_t>(q_));
    for (int i = 0; i < q_; ++i) root_labels[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    struct Item {
      int node;
      std::int32_t state;
      std::vector<std::uint8_t> labels;  // slot -> final part label
    };
    std::vector<Item> stack{{nt_.root(), 0, std::move(root_labels)}};
    while (!stack.empty()) {
      Item it = std::move(stack.back());
      stack.pop_back();
      const NiceNode& nd = nt_.node(it.node);
      const State& s =
          tables_[static_cast<std::size_t>(it.node)][static_cast<std::size_t>(it.state)];
      auto child_labels = [&](const std::vector<std::uint8_t>& perm) {
        std::vector<std::uint8_t> out(static_cast<std::size_t>(q_));
        for (int i = 0; i < q_; ++i) {
          out[perm[static_cast<std::size_t>(i)]] = it.labels[static_cast<std::size_t>(i)];
        }
        return out;
      };
      switch (nd.kind) {
        case NodeKind::kLeaf:
          break;
        case NodeKind::kIntroduce: {
          const int pos = bag_position(nd.bag, nd.vertex);
          for (int k = 0; k < q_; ++k) {
            if ((s.slots[static_cast<std::size_t>(k)].mask >> pos) & 1u) {
              part[nd.vertex] = it.labels[static_cast<std::size_t>(k)];
              break;
            }
          }
          stack.push_back({nd.child1, s.c1, child_labels(s.perm1)});
          break;
        }
        case NodeKind::kForget:
          stack.push_back({nd.child1, s.c1, child_labels(s.perm1)});
          break;
        case NodeKind::kJoin:
          stack.push_back({nd.child1, s.c1, child_labels(s.perm1)});
          stack.push_back({nd.child2, s.c2, child_labels(s.perm2)});
          break;
      }
    }
    return part;
  }

 private:
  // Sorts raw slots (indexed by child slot) canonically; perm[i] is the raw
  // index that landed at position i.
  static void canonicalize(std::vector<Slot>& slots, std::vector<std::uint8_t>& perm) {
    const int q = static_cast<int>(slots.size());
    std::vector<int> idx(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::sort(idx.begin(), idx.end(), [&slots](int x, int y) {
      const Slot& sx = slots[static_cast<std::size_t>(x)];
      const Slot& sy = slots[static_cast<std::size_t>(y)];
      if (sx == sy) return x < y;
      return sx < sy;
    });
    std::vector<Slot> sorted;
    sorted.reserve(static_cast<std::size_t>(q));
    perm.resize(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) {
      sorted.push_back(std::move(slots[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]));
      perm[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(idx[static_cast<std::size_t>(i)]);
    }
    slots = std::move(sorted);
  }

  void push(std::vector<State>& out, std::vector<Slot> raw, std::int32_t c1, std::int32_t c2,
            const std::vector<std::uint8_t>* raw2 = nullptr) {
    State t;
    std::vector<std::uint8_t> perm;
    canonicalize(raw, perm);
    t.slots = std::move(raw);
    t.c1 = c1;
    t.c2 = c2;
    t.perm1 = perm;
    if (raw2) {
      t.perm2.resize(static_cast<std::size_t>(q_));
      for (int i = 0; i < q_; ++i) {
        t.perm2[static_cast<std::size_t>(i)] = (*raw2)[perm[static_cast<std::size_t>(i)]];
      }
    }
    out.push_back(std::move(t));
  }

  void process(int id) {
    const NiceNode& nd = nt_.node(id);
    std::vector<State>& out = tables_[static_cast<std::size_t>(id)];
    switch (nd.kind) {
      case NodeKind::kLeaf: {
        State s;
        s.slots.resize(static_cast<std::size_t>(q_));
        for (auto& slot : s.slots) slot.aux = policy_.leaf();
        out.push_back(std::move(s));
        break;
      }
      case NodeKind::kIntroduce: {
        const NiceNode& child = nt_.node(nd.child1);
        const int pos = bag_position(nd.bag, nd.vertex);
        const auto& in = tables_[static_cast<std::size_t>(nd.child1)];
        for (std::size_t i = 0; i < in.size(); ++i) {
          const State& s = in[i];
          for (int t = 0; t < q_; ++t) {
            // Equal slots give identical results; place into the first only.
            bool dup = false;
            for (int u = 0; u < t && !dup; ++u) {
              dup = s.slots[static_cast<std::size_t>(u)] == s.slots[static_cast<std::size_t>(t)];
            }
            if (dup) continue;
            const Slot& target = s.slots[static_cast<std::size_t>(t)];
            const auto side = mask_vertices(child.bag, target.mask, true);
            Aux grown{};
            if (!policy_.introduce(side, nd.vertex, target.aux, grown)) continue;
            std::vector<Slot> raw;
            raw.reserve(static_cast<std::size_t>(q_));
            for (int u = 0; u < q_; ++u) {
              const Slot& src = s.slots[static_cast<std::size_t>(u)];
              Slot next;
              next.mask = insert_bit(src.mask, pos, u == t);
              next.aux = (u == t) ? grown : src.aux;
              raw.push_back(std::move(next));
            }
            push(out, std::move(raw), static_cast<std::int32_t>(i), -1);
          }
        }
        break;
      }
      case NodeKind::kForget: {
        const NiceNode& child = nt_.node(nd.child1);
        const int pos = bag_position(child.bag, nd.vertex);
        const auto& in = tables_[static_cast<std::size_t>(nd.child1)];
        for (std::size_t i = 0; i < in.size(); ++i) {
          const State& s = in[i];
          int holder = -1;
          for (int k = 0; k < q_; ++k) {
            if ((s.slots[static_cast<std::size_t>(k)].mask >> pos) & 1u) {
              holder = k;
              break;
            }
          }
          std::vector<Slot> raw;
          raw.reserve(static_cast<std::size_t>(q_));
          bool ok = true;
          for (int u = 0; u < q_ && ok; ++u) {
            const Slot& src = s.slots[static_cast<std::size_t>(u)];
            Slot next;
            next.mask = remove_bit(src.mask, pos);
            if (u == holder) {
              const auto side = mask_vertices(nd.bag, next.mask, true);
              ok = policy_.forget(side, nd.vertex, src.aux, next.aux);
            } else {
              next.aux = src.aux;
            }
            raw.push_back(std::move(next));
          }
          if (ok) push(out, std::move(raw), static_cast<std::int32_t>(i), -1);
        }
        break;
      }
      case NodeKind::kJoin: {
        const auto& t1 = tables_[static_cast<std::size_t>(nd.child1)];
        const auto& t2 = tables_[static_cast<std::size_t>(nd.child2)];
        for (std::size_t x = 0; x < t1.size(); ++x) {
          for (std::size_t y = 0; y < t2.size(); ++y) {
            join_pair(nd, t1[x], t2[y], static_cast<std::int32_t>(x),
                      static_cast<std::int32_t>(y), out);
          }
        }
        break;
      }
    }

    std::sort(out.begin(), out.end(), [](const State& x, const State& y) {
      return std::tie(x.slots, x.c1, x.c2, x.perm1, x.perm2) <
             std::tie(y.slots, y.c1, y.c2, y.perm1, y.perm2);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const State& x, const State& y) { return x.slots == y.slots; }),
              out.end());

    std::lock_guard<std::mutex> lock(peak_mu_);
    peak_ = std::max(peak_, out.size());
  }

  void join_pair(const NiceNode& nd, const State& s1, const State& s2, std::int32_t x,
                 std::int32_t y, std::vector<State>& out) {
    // Non-empty slots must pair up by identical bag content; empty slots
    // pair in every value-distinct way.
    std::vector<int> match(static_cast<std::size_t>(q_), -1);
    std::vector<int> empty1, empty2;
    for (int k = 0; k < q_; ++k) {
      if (s2.slots[static_cast<std::size_t>(k)].mask == 0) empty2.push_back(k);
    }
    for (int k = 0; k < q_; ++k) {
      const Slot& slot = s1.slots[static_cast<std::size_t>(k)];
      if (slot.mask == 0) {
        empty1.push_back(k);
        continue;
      }
      int found = -1;
      for (int j = 0; j < q_; ++j) {
        if (s2.slots[static_cast<std::size_t>(j)].mask == slot.mask) {
          found = j;
          break;
        }
      }
      if (found < 0) return;  // different bag partitions; nothing to join
      match[static_cast<std::size_t>(k)] = found;
    }

    auto aux_less = [&s2](int a, int b) {
      return s2.slots[static_cast<std::size_t>(a)].aux < s2.slots[static_cast<std::size_t>(b)].aux;
    };
    std::sort(empty2.begin(), empty2.end(), aux_less);
    do {
      std::vector<Slot> raw(static_cast<std::size_t>(q_));
      std::vector<std::uint8_t> raw2(static_cast<std::size_t>(q_));
      bool ok = true;
      std::vector<int> pairing = match;
      for (std::size_t e = 0; e < empty1.size(); ++e) {
        pairing[static_cast<std::size_t>(empty1[e])] = empty2[e];
      }
      for (int k = 0; k < q_ && ok; ++k) {
        const Slot& a = s1.slots[static_cast<std::size_t>(k)];
        const Slot& b = s2.slots[static_cast<std::size_t>(pairing[static_cast<std::size_t>(k)])];
        Slot merged;
        merged.mask = a.mask;
        const auto side = mask_vertices(nd.bag, a.mask, true);
        ok = policy_.join(side, a.aux, b.aux, merged.aux);
        raw[static_cast<std::size_t>(k)] = std::move(merged);
        raw2[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(pairing[static_cast<std::size_t>(k)]);
      }
      if (ok) push(out, std::move(raw), x, y, &raw2);
    } while (std::next_permutation(empty2.begin(), empty2.end(), aux_less));
  }

  const NiceTreeDecomposition& nt_;
  Policy policy_;
  int q_;
  std::vector<std::vector<State>> tables_;
  std::mutex peak_mu_;
  std::size_t peak_ = 0;
};

}  // namespace hbip::detail
