#include <benchmark/benchmark.h>

#include "deltacolor/brooks.hpp"
#include "deltacolor/generators.hpp"
#include "deltacolor/primitives.hpp"
#include "deltacolor/structure.hpp"

namespace deltacolor {
namespace {

void BM_Linial(benchmark::State& state) {
  const Graph g = gen::regular(static_cast<std::size_t>(state.range(0)), 4, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(linial_coloring(g));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Linial)->Arg(1 << 10)->Arg(1 << 13);

void BM_RulingSetDetK(benchmark::State& state) {
  const Graph g = gen::regular(static_cast<std::size_t>(state.range(0)), 3, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ruling_set(g, {4, RulingMethod::kDetK}, 0));
  }
}
BENCHMARK(BM_RulingSetDetK)->Arg(1 << 10)->Arg(1 << 13);

void BM_BlockDecomposition(benchmark::State& state) {
  const Graph g = gen::regular(static_cast<std::size_t>(state.range(0)), 3, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(block_decomposition(g));
  }
}
BENCHMARK(BM_BlockDecomposition)->Arg(1 << 12)->Arg(1 << 15);

void BM_DccSearch(benchmark::State& state) {
  const Graph g = gen::high_girth(static_cast<std::size_t>(state.range(0)), 3, 8, 4);
  DccFinder finder(g);
  NodeId v = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(finder.find(v, 30));
    v = (v + 97) % static_cast<NodeId>(g.num_nodes());
  }
}
BENCHMARK(BM_DccSearch)->Arg(1 << 12)->Arg(1 << 15);

void BM_BrooksCompletion(benchmark::State& state) {
  const Graph g = gen::regular(static_cast<std::size_t>(state.range(0)), 3, 5);
  const auto base = layered_color(g, distance_layers(g, std::vector<NodeId>{0}), 3, Coloring(g.num_nodes(), kUncolored),
                                  {ListMode::kRandomized, nullptr, 1, {}});
  for (auto _ : state) {
    Coloring colors = base.colors;
    benchmark::DoNotOptimize(complete_at(g, colors, 0, brooks_radius(g.num_nodes(), 3)));
  }
}
BENCHMARK(BM_BrooksCompletion)->Arg(1 << 10)->Arg(1 << 14);

}  // namespace
}  // namespace deltacolor
