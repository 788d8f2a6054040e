#include "deltacolor/detcolor.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "deltacolor/brooks.hpp"
#include "deltacolor/errors.hpp"
#include "deltacolor/primitives.hpp"
#include "deltacolor/structure.hpp"

namespace deltacolor {
namespace {

using Clock = std::chrono::steady_clock;

void require_nice(const Graph& g) {
  if (!is_nice(g)) {
    throw Error(ErrorCode::kNotNice, "graph is a path, a cycle, a clique or disconnected");
  }
}

// Brooks completion at each B_0 node. The nodes are at least R apart and
// each completion stays within R/2, so the sequential loop equals running
// them in parallel; the charge is the slowest one.
std::size_t complete_base(const Graph& g, Coloring& colors, const std::vector<NodeId>& base) {
  const std::uint32_t radius = brooks_radius(g.num_nodes(), g.max_degree());
  std::size_t rounds = 0;
  for (NodeId b : base) {
    if (colors[b] == kUncolored) {
      rounds = std::max(rounds, complete_at(g, colors, b, radius).rounds);
    }
  }
  return rounds;
}

void finish(const Graph& g, DetResult& result, Clock::time_point start) {
  result.report.valid = verify(g, result.colors, static_cast<Color>(g.max_degree())).ok();
  result.report.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

DetParams det_params(std::size_t n, std::size_t delta, bool netcomp) {
  DetParams p;
  if (n > 1 && delta >= 3) {
    p.R = static_cast<std::uint32_t>(std::ceil(4.0 * std::log(static_cast<double>(n)) /
                                               std::log(static_cast<double>(delta - 1)) - 1e-12)) + 1;
  }
  p.R = std::max<std::uint32_t>(p.R, 3);
  p.z = netcomp ? p.R + 1 : 4 * p.R * p.R;
  return p;
}

DetResult color_det_rulingforest(const Graph& g, std::uint64_t seed) {
  require_nice(g);
  const auto start = Clock::now();
  const Color delta = static_cast<Color>(g.max_degree());
  DetResult result;
  result.params = det_params(g.num_nodes(), delta);
  result.report.algorithm = "det";
  result.report.seed = seed;
  result.report.n = g.num_nodes();
  result.report.delta = delta;

  const auto linial = linial_coloring(g);
  result.report.charge("linial", linial.rounds);

  const auto ruling = ruling_set(g, {result.params.R, RulingMethod::kDetK}, seed);
  result.report.charge("ruling_set", ruling.rounds);
  result.base_nodes = ruling.members.size();

  const auto layers = distance_layers(g, ruling.members);
  result.layers = static_cast<std::uint32_t>(layers.depth());
  result.report.charge("layering", result.layers);

  LayeredConfig config;
  config.base_coloring = &linial.colors;
  config.seed = seed;
  auto colored = layered_color(g, layers, delta, Coloring(g.num_nodes(), kUncolored), config);
  result.report.charge("layer_coloring", colored.rounds);
  result.colors = std::move(colored.colors);

  result.report.charge("brooks", complete_base(g, result.colors, ruling.members));
  finish(g, result, start);
  return result;
}

DetResult color_det_netcomp(const Graph& g, std::uint64_t seed) {
  require_nice(g);
  const auto start = Clock::now();
  const std::size_t n = g.num_nodes();
  const Color delta = static_cast<Color>(g.max_degree());
  DetResult result;
  result.params = det_params(n, delta, true);
  result.report.algorithm = "netcomp";
  result.report.seed = seed;
  result.report.n = n;
  result.report.delta = delta;
  const std::uint32_t R = result.params.R;
  const auto log_n = static_cast<std::uint32_t>(std::ceil(std::log2(static_cast<double>(std::max<std::size_t>(n, 2)))));

  // (R, R-1) ruling set: clusters of one color are more than R apart, so
  // each cluster adds its nodes greedily and in parallel with the others.
  const auto nd_far = network_decomposition(g, 2 * R * log_n, log_n, seed, R);
  result.nd_colors = nd_far.num_colors;
  std::vector<NodeId> base;
  std::vector<std::uint32_t> dist(n, kUnreached);
  std::vector<NodeId> queue;
  auto add_member = [&](NodeId v) {
    base.push_back(v);
    // refresh distances to the member set up to R - 1
    dist[v] = 0;
    queue.assign(1, v);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const NodeId u = queue[head];
      if (dist[u] + 1 >= R) {
        continue;
      }
      for (NodeId w : g.neighbors(u)) {
        if (dist[w] > dist[u] + 1) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
  };
  for (std::uint32_t c = 0; c < nd_far.num_colors; ++c) {
    for (NodeId v = 0; v < n; ++v) {
      if (nd_far.color[v] == c && dist[v] >= R) {
        add_member(v);
      }
    }
  }
  std::sort(base.begin(), base.end());
  result.base_nodes = base.size();
  result.report.charge("ruling_set", nd_far.rounds + nd_far.num_colors * (nd_far.diameter_bound + R));

  const auto layers = distance_layers(g, base);
  result.layers = static_cast<std::uint32_t>(layers.depth());
  if (result.layers > result.params.z) {
    throw Error(ErrorCode::kInternal, "layer depth " + std::to_string(result.layers) + " exceeds R + 1");
  }
  result.report.charge("layering", result.layers);

  // layer coloring scheduled by a decomposition with adjacent clusters in
  // different colors; each cluster colors its part greedily
  const auto nd_near = network_decomposition(g, 2 * log_n, log_n, seed + 1, 1);
  result.report.charge("decomposition", nd_near.rounds);
  Coloring colors(n, kUncolored);
  std::vector<char> used(delta + 1, 0);
  std::size_t coloring_rounds = 0;
  std::vector<std::vector<NodeId>> by_color(nd_near.num_colors);
  for (std::size_t i = layers.layers.size(); i-- > 1;) {
    for (auto& bucket : by_color) {
      bucket.clear();
    }
    for (NodeId v : layers.layers[i]) {
      by_color[nd_near.color[v]].push_back(v);
    }
    for (const auto& bucket : by_color) {
      if (bucket.empty()) {
        continue;
      }
      for (NodeId v : bucket) {
        std::size_t free = delta;
        std::size_t layer_degree = 0;
        std::fill(used.begin(), used.end(), 0);
        for (NodeId w : g.neighbors(v)) {
          if (colors[w] != kUncolored) {
            if (!used[colors[w]]) {
              used[colors[w]] = 1;
              --free;
            }
          }
        }
        for (NodeId w : g.neighbors(v)) {
          const bool same_layer = std::binary_search(layers.layers[i].begin(), layers.layers[i].end(), w);
          layer_degree += same_layer && colors[w] == kUncolored;
        }
        if (free < layer_degree + 1) {
          throw Error(ErrorCode::kLayerListViolation, "node " + std::to_string(v) + " in layer " + std::to_string(i));
        }
        Color c = 1;
        while (used[c]) {
          ++c;
        }
        colors[v] = c;
      }
      coloring_rounds += nd_near.diameter_bound + 1;
    }
  }
  result.report.charge("layer_coloring", coloring_rounds);
  result.colors = std::move(colors);
  result.report.charge("brooks", complete_base(g, result.colors, base));
  finish(g, result, start);
  return result;
}

}  // namespace deltacolor
