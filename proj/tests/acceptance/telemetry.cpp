#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <sstream>

#include "cli.hpp"
#include "common.hpp"
#include "deltacolor/detcolor.hpp"
#include "deltacolor/generators.hpp"
#include "deltacolor/io.hpp"
#include "deltacolor/randcolor.hpp"

namespace deltacolor::acceptance {
namespace {

constexpr std::size_t kSmallDeltaSize = 100000;
constexpr std::uint64_t kSeeds = 20;
constexpr double kSmallDeltaSuccess = 0.95;
constexpr std::size_t kShatterSize = 10000;
constexpr std::size_t kShatterDelta = 6;
constexpr double kResidual = 2.0;
constexpr double kRandGrowth = 1.5;

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(3) << x;
  return s.str();
}

}  // namespace

Verdict small_delta_success() {
  const Graph g = gen::high_girth(kSmallDeltaSize, 3, 8, 4242);
  std::size_t empty = 0;
  std::size_t h_total = 0;
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    const auto r = run_randomized(g, RandVariant::kSmallDelta, seed);
    empty += r.stats.leftover == 0 ? 1 : 0;
    h_total += r.stats.h_size;
  }
  const double rate = static_cast<double>(empty) / kSeeds;
  std::ostringstream d;
  d << empty << "/" << kSeeds << " runs with empty leftover; mean |H| " << h_total / kSeeds;
  return {rate >= kSmallDeltaSuccess, d.str()};
}

Verdict large_delta_shattering() {
  const Graph g = gen::regular(kShatterSize, kShatterDelta, 4343);
  const double bound = std::pow(static_cast<double>(kShatterDelta), -4.0);
  double worst_fraction = 0.0;
  std::size_t worst_component = 0;
  std::uint64_t cap = 0;
  std::size_t ok = 0;
  std::size_t h_total = 0;
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    const auto r = run_randomized(g, RandVariant::kLargeDelta, seed);
    cap = r.params.component_cap;
    worst_fraction = std::max(worst_fraction, r.stats.unhappy_fraction);
    worst_component = std::max(worst_component, r.stats.max_component);
    h_total += r.stats.h_size;
    ok += r.stats.unhappy_fraction <= bound && r.stats.max_component <= cap ? 1 : 0;
  }
  std::ostringstream d;
  d << ok << "/" << kSeeds << " within bounds; worst unhappy fraction " << fmt(worst_fraction) << " (limit "
    << fmt(bound) << "); largest component " << worst_component << " (cap " << cap << "); mean |H| "
    << h_total / kSeeds;
  return {ok == kSeeds, d.str()};
}

Verdict round_scaling() {
  constexpr std::size_t kDelta = 3;
  std::vector<double> ratios;
  std::ostringstream d;
  d << "det rounds";
  for (std::size_t log_n : {8, 10, 12, 14}) {
    const std::size_t n = std::size_t{1} << log_n;
    const auto r = color_det_rulingforest(gen::regular(n, kDelta, 600 + log_n), 0);
    const double rounds = static_cast<double>(r.report.total_rounds());
    ratios.push_back(rounds / (static_cast<double>(log_n * log_n) * kDelta * kDelta));
    d << " " << r.report.total_rounds();
  }
  double log_sum = 0.0;
  for (double x : ratios) {
    log_sum += std::log(x);
  }
  const double k = std::exp(log_sum / static_cast<double>(ratios.size()));
  double worst = 1.0;
  for (double x : ratios) {
    worst = std::max({worst, x / k, k / x});
  }
  d << ", K " << fmt(k) << ", worst residual " << fmt(worst) << "x; rand rounds";
  std::vector<double> rand_rounds;
  for (std::size_t log_n : {10, 12, 14}) {
    const std::size_t n = std::size_t{1} << log_n;
    const auto r = run_randomized(gen::regular(n, 6, 700 + log_n), RandVariant::kLargeDelta, 0);
    rand_rounds.push_back(static_cast<double>(r.report.total_rounds()));
    d << " " << r.report.total_rounds();
  }
  double growth = 0.0;
  for (std::size_t i = 1; i < rand_rounds.size(); ++i) {
    growth = std::max(growth, rand_rounds[i] / rand_rounds[i - 1]);
  }
  d << ", largest 4x growth " << fmt(growth);
  return {worst <= kResidual && growth <= kRandGrowth, d.str()};
}

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

Verdict determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "deltacolor_acceptance";
  std::filesystem::create_directories(dir);
  std::size_t runs = 0;
  std::size_t identical = 0;
  std::size_t failed = 0;
  std::string first_mismatch;
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const auto& inst = corpus()[i];
    const auto graph_path = dir / ("g" + std::to_string(i) + ".txt");
    write_graph(graph_path, inst.graph);
    const std::size_t delta = inst.graph.max_degree();
    std::vector<std::string> algos{"det", "netcomp"};
    if (delta >= 4) {
      algos.emplace_back("rand");
    }
    if (delta <= 6) {
      algos.emplace_back("rand-small");
    }
    for (const auto& algo : algos) {
      std::string files[2][2];
      bool ok = true;
      for (int rep = 0; rep < 2; ++rep) {
        const auto stem = dir / (algo + std::to_string(rep));
        const auto out = stem.string() + ".col";
        const auto report = stem.string() + ".json";
        std::ostringstream sink;
        const int code = cli::run_cli({"run", "--algo", algo, "--graph", graph_path.string(), "--seed", "7", "--out",
                                       out, "--report", report},
                                      sink, sink);
        ok = ok && code == cli::kExitOk;
        files[rep][0] = slurp(out);
        files[rep][1] = slurp(report);
      }
      ++runs;
      failed += ok ? 0 : 1;
      const bool same = ok && files[0][0] == files[1][0] && files[0][1] == files[1][1] && !files[0][0].empty();
      identical += same ? 1 : 0;
      if (!same && first_mismatch.empty()) {
        first_mismatch = inst.name + " " + algo;
      }
    }
  }
  std::filesystem::remove_all(dir);
  std::ostringstream d;
  d << identical << "/" << runs << " (graph, algorithm) pairs byte-identical over two runs";
  if (failed > 0) {
    d << "; " << failed << " runs failed";
  }
  if (!first_mismatch.empty()) {
    d << "; first mismatch " << first_mismatch;
  }
  return {identical == runs, d.str()};
}

}  // namespace deltacolor::acceptance
