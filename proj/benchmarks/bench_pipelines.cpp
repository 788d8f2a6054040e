#include <benchmark/benchmark.h>

#include "deltacolor/detcolor.hpp"
#include "deltacolor/generators.hpp"
#include "deltacolor/randcolor.hpp"

namespace deltacolor {
namespace {

void BM_Det(benchmark::State& state) {
  const Graph g = gen::regular(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), 1);
  std::size_t rounds = 0;
  for (auto _ : state) {
    rounds = color_det_rulingforest(g, 1).report.total_rounds();
  }
  state.counters["rounds"] = static_cast<double>(rounds);
}
BENCHMARK(BM_Det)->Args({1 << 10, 3})->Args({1 << 14, 3})->Args({1 << 12, 8})->Unit(benchmark::kMillisecond);

void BM_NetComp(benchmark::State& state) {
  const Graph g = gen::regular(static_cast<std::size_t>(state.range(0)), 4, 1);
  std::size_t rounds = 0;
  for (auto _ : state) {
    rounds = color_det_netcomp(g, 1).report.total_rounds();
  }
  state.counters["rounds"] = static_cast<double>(rounds);
}
BENCHMARK(BM_NetComp)->Arg(1 << 10)->Arg(1 << 13)->Unit(benchmark::kMillisecond);

void BM_RandLarge(benchmark::State& state) {
  const Graph g = gen::regular(static_cast<std::size_t>(state.range(0)), 6, 1);
  std::size_t rounds = 0;
  for (auto _ : state) {
    rounds = run_randomized(g, RandVariant::kLargeDelta, 1).report.total_rounds();
  }
  state.counters["rounds"] = static_cast<double>(rounds);
}
BENCHMARK(BM_RandLarge)->Arg(1 << 10)->Arg(1 << 12)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

void BM_RandSmall(benchmark::State& state) {
  const Graph g = gen::regular(static_cast<std::size_t>(state.range(0)), 3, 1);
  std::size_t rounds = 0;
  for (auto _ : state) {
    rounds = run_randomized(g, RandVariant::kSmallDelta, 1).report.total_rounds();
  }
  state.counters["rounds"] = static_cast<double>(rounds);
}
BENCHMARK(BM_RandSmall)->Arg(1 << 10)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace deltacolor
