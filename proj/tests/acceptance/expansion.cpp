#include <algorithm>
#include <cmath>
#include <sstream>

#include "common.hpp"
#include "deltacolor/generators.hpp"
#include "deltacolor/randcolor.hpp"
#include "deltacolor/structure.hpp"

namespace deltacolor::acceptance {
namespace {

constexpr std::size_t kPairs = 50;

struct Setting {
  std::size_t delta;
  std::size_t n;
  std::uint32_t r;
};

// Every sampled ball is certified on its own.
constexpr Setting kSettings[] = {{3, 100000, 6}, {4, 20000, 4}, {5, 20000, 2}, {6, 20000, 2}};

struct Pair {
  const Graph* graph;
  NodeId v;
  std::uint32_t r;
  std::size_t delta;
  const std::vector<char>* uncolored;
};

struct Sample {
  std::vector<Graph> graphs;
  std::vector<std::vector<char>> uncolored;
  std::vector<Pair> pairs;
};

bool all_degree(const Graph& g, std::span<const NodeId> nodes, std::size_t delta) {
  return std::all_of(nodes.begin(), nodes.end(), [&](NodeId u) { return g.degree(u) == delta; });
}

const Sample& sample() {
  static const Sample s = [] {
    Sample out;
    out.graphs.reserve(std::size(kSettings));
    out.uncolored.reserve(std::size(kSettings));
    for (std::size_t i = 0; i < std::size(kSettings); ++i) {
      const auto& cfg = kSettings[i];
      out.graphs.push_back(gen::regular(cfg.n, cfg.delta, 500 + i));
      const Graph& g = out.graphs.back();
      const auto marking = marking_process(g, MarkingParams{0.05, 4, cfg.r}, 900 + i);
      std::vector<char> uncolored(g.num_nodes(), 1);
      for (NodeId m : marking.marked) {
        uncolored[m] = 0;
      }
      out.uncolored.push_back(std::move(uncolored));
    }
    const std::size_t per = (kPairs + std::size(kSettings) - 1) / std::size(kSettings);
    for (std::size_t i = 0; i < std::size(kSettings) && out.pairs.size() < kPairs; ++i) {
      const auto& cfg = kSettings[i];
      const Graph& g = out.graphs[i];
      std::size_t taken = 0;
      for (NodeId v = 0; v < g.num_nodes() && taken < per && out.pairs.size() < kPairs; v += 97) {
        if (!out.uncolored[i][v] || !ball_is_dcc_free(g, v, cfg.r) || !all_degree(g, ball(g, v, cfg.r), cfg.delta)) {
          continue;
        }
        out.pairs.push_back({&g, v, cfg.r, cfg.delta, &out.uncolored[i]});
        ++taken;
      }
    }
    return out;
  }();
  return s;
}

// Nodes within distance r of v along uncolored paths.
std::size_t uncolored_ball(const Graph& g, NodeId v, std::uint32_t r, const std::vector<char>& uncolored) {
  std::vector<NodeId> frontier{v};
  std::vector<char> seen(g.num_nodes(), 0);
  seen[v] = 1;
  std::size_t count = 1;
  for (std::uint32_t t = 0; t < r; ++t) {
    std::vector<NodeId> next;
    for (NodeId u : frontier) {
      for (NodeId w : g.neighbors(u)) {
        if (!seen[w] && uncolored[w]) {
          seen[w] = 1;
          next.push_back(w);
        }
      }
    }
    count += next.size();
    frontier = std::move(next);
  }
  return count;
}

}  // namespace

Verdict expansion_lemmas() {
  const auto& s = sample();
  std::size_t violations = 0;
  std::size_t checks = 0;
  std::size_t t_checks = 0;
  for (const auto& p : s.pairs) {
    const double d = static_cast<double>(p.delta);
    const double half = p.r / 2.0;
    const auto full = ball(*p.graph, p.v, p.r).size();
    ++checks;
    violations += static_cast<double>(full) >= std::pow(d - 1.0, half) ? 0 : 1;
    const auto after = uncolored_ball(*p.graph, p.v, p.r, *p.uncolored);
    if (p.r % 2 == 0) {
      ++checks;
      violations += static_cast<double>(after) >= std::pow(d - 2.0, half) ? 0 : 1;
    }
    if (p.delta == 3 && p.r % 6 == 0) {
      ++t_checks;
      violations += static_cast<double>(after) >= std::pow(4.0, p.r / 6.0) ? 0 : 1;
    }
  }
  std::ostringstream out;
  out << s.pairs.size() << " certified pairs, " << checks + t_checks << " bound checks (" << t_checks
      << " at Delta=3, r=6); " << violations << " violations";
  return {s.pairs.size() == kPairs && violations == 0 && t_checks > 0, out.str()};
}

Verdict bfs_uniqueness() {
  const auto& s = sample();
  std::size_t violations = 0;
  std::size_t nodes = 0;
  for (const auto& p : s.pairs) {
    const auto bfs = bfs_layers(*p.graph, p.v, p.r);
    for (std::size_t t = 1; t < bfs.levels.size(); ++t) {
      for (NodeId u : bfs.levels[t]) {
        ++nodes;
        violations += bfs.up_degree(*p.graph, u) == 1 ? 0 : 1;
      }
    }
  }
  std::ostringstream out;
  out << nodes << " level nodes over " << s.pairs.size() << " balls; " << violations << " with more than one parent";
  return {s.pairs.size() == kPairs && violations == 0, out.str()};
}

}  // namespace deltacolor::acceptance
