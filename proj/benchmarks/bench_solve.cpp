// Benchmarks: solver throughput on partial 2-trees and the decomposition
// heuristic on sparse random graphs.
#include <benchmark/benchmark.h>

#include <random>
#include <utility>
#include <vector>

#include "hbip/graph.hpp"
#include "hbip/min_fill.hpp"
#include "hbip/pattern.hpp"
#include "hbip/solve.hpp"

namespace {

// A random partial 2-tree plus its construction decomposition (width 2).
std::pair<hbip::Graph, hbip::TreeDecomposition> partial_two_tree(hbip::Vertex n,
                                                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<hbip::Vertex, hbip::Vertex>> edges = {{0, 1}};
  // Each host edge remembers the bag holding both its endpoints, so the bag
  // of an attached vertex can hang off it without breaking connectivity.
  std::vector<std::pair<hbip::Vertex, hbip::Vertex>> host = {{0, 1}};
  std::vector<int> host_bag = {0};
  hbip::TreeDecomposition td;
  td.bags.push_back({0, 1});
  for (hbip::Vertex v = 2; v < n; ++v) {
    const std::size_t pick = rng() % host.size();
    const auto [x, y] = host[pick];
    hbip::Vertex lo = std::min({x, y, v}), hi = std::max({x, y, v});
    hbip::Vertex mid = static_cast<hbip::Vertex>(x + y + v - lo - hi);
    const int bag = static_cast<int>(td.bags.size());
    td.bags.push_back({lo, mid, hi});
    td.tree_edges.emplace_back(host_bag[pick], bag);
    if (rng() % 4 != 0) edges.emplace_back(x, v);  // drop some edges: partial
    if (rng() % 4 != 0) edges.emplace_back(y, v);
    host.emplace_back(x, v);
    host_bag.push_back(bag);
    host.emplace_back(y, v);
    host_bag.push_back(bag);
  }
  return {hbip::Graph::from_edges(n, edges), std::move(td)};
}

hbip::Graph gnp(hbip::Vertex n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<hbip::Vertex, hbip::Vertex>> edges;
  for (hbip::Vertex u = 0; u < n; ++u)
    for (hbip::Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return hbip::Graph::from_edges(n, edges);
}

void BM_SolveCliqueTwoTree(benchmark::State& state) {
  const auto n = static_cast<hbip::Vertex>(state.range(0));
  const auto [g, td] = partial_two_tree(n, 7);
  const auto h = hbip::PatternGraph::clique(3);
  hbip::SolveOptions opts;
  opts.want_certificate = false;
  for (auto _ : state) {
    auto dec = hbip::solve_bipartition(g, h, hbip::ContainmentVariant::kSubgraph, opts, &td);
    benchmark::DoNotOptimize(dec);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SolveCliqueTwoTree)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void BM_SolveGeneralP4TwoTree(benchmark::State& state) {
  const auto n = static_cast<hbip::Vertex>(state.range(0));
  const auto [g, td] = partial_two_tree(n, 11);
  const auto h = hbip::PatternGraph::path(4);
  hbip::SolveOptions opts;
  opts.want_certificate = false;
  for (auto _ : state) {
    auto dec = hbip::solve_bipartition(g, h, hbip::ContainmentVariant::kSubgraph, opts, &td);
    benchmark::DoNotOptimize(dec);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SolveGeneralP4TwoTree)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

void BM_MinFill(benchmark::State& state) {
  const auto n = static_cast<hbip::Vertex>(state.range(0));
  const auto g = gnp(n, 4.0 / n, 13);
  for (auto _ : state) {
    auto td = hbip::heuristic_decomposition(g, 1);
    benchmark::DoNotOptimize(td);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_MinFill)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

}  // namespace

BENCHMARK_MAIN();
