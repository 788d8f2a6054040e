#include "deltacolor/randcolor.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

#include "deltacolor/brooks.hpp"
#include "deltacolor/errors.hpp"
#include "deltacolor/random.hpp"
#include "deltacolor/structure.hpp"
#include "json.hpp"

namespace deltacolor {

namespace {

using Clock = std::chrono::steady_clock;

// Round keys for node_stream; fixed so streams never collide across steps.
constexpr std::uint64_t kSelectRound = 0;
constexpr std::uint64_t kPairRound = 1;

std::vector<char> all_members(const Graph& g, const std::vector<char>& in_h) {
  return in_h.empty() ? std::vector<char>(g.num_nodes(), 1) : in_h;
}

// BFS restricted to a node mask, reusing its scratch between runs.
class MaskedBfs {
 public:
  MaskedBfs(const Graph& g, const std::vector<char>& mask)
      : g_(g), mask_(mask), stamp_(g.num_nodes(), 0), dist_(g.num_nodes(), 0) {}

  // Visits nodes within `limit` of `source` in BFS order until `visit`
  // returns true. Returns whether it did.
  template <class Visit>
  bool search(NodeId source, std::uint32_t limit, Visit visit) {
    ++epoch_;
    queue_.clear();
    queue_.push_back(source);
    stamp_[source] = epoch_;
    dist_[source] = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const NodeId u = queue_[head];
      if (visit(u, dist_[u])) {
        return true;
      }
      if (dist_[u] == limit) {
        continue;
      }
      for (NodeId w : g_.neighbors(u)) {
        if (mask_[w] && stamp_[w] != epoch_) {
          stamp_[w] = epoch_;
          dist_[w] = dist_[u] + 1;
          queue_.push_back(w);
        }
      }
    }
    return false;
  }

 private:
  const Graph& g_;
  const std::vector<char>& mask_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> dist_;
  std::vector<NodeId> queue_;
  std::uint32_t epoch_ = 0;
};

std::vector<char> mask_of(std::size_t n, std::span<const NodeId> nodes) {
  std::vector<char> mask(n, 0);
  for (NodeId v : nodes) {
    mask[v] = 1;
  }
  return mask;
}

void collect(const LayerDecomposition& d, std::vector<char>& mask) {
  for (const auto& layer : d.layers) {
    for (NodeId v : layer) {
      mask[v] = 1;
    }
  }
}

// Brute-forces one degree-choosable piece against the colors around it.
bool color_piece(const Graph& g, std::span<const NodeId> piece, Coloring& colors, Color palette) {
  const Subgraph sub = induced_subgraph(g, piece);
  ListAssignment lists(piece.size());
  std::vector<char> used(palette + 1, 0);
  for (NodeId local = 0; local < sub.to_parent.size(); ++local) {
    std::fill(used.begin(), used.end(), 0);
    const NodeId v = sub.to_parent[local];
    for (NodeId w : g.neighbors(v)) {
      if (sub.to_local(w) == kNoNode && colors[w] != kUncolored && colors[w] <= palette) {
        used[colors[w]] = 1;
      }
    }
    for (Color c = 1; c <= palette; ++c) {
      if (!used[c]) {
        lists[local].push_back(c);
      }
    }
  }
  auto solved = solve_lists(sub.graph, lists);
  if (!solved) {
    return false;
  }
  for (NodeId local = 0; local < sub.to_parent.size(); ++local) {
    colors[sub.to_parent[local]] = (*solved)[local];
  }
  return true;
}

Color smallest_free(const Graph& g, NodeId v, const Coloring& colors, Color palette) {
  std::vector<char> used(palette + 1, 0);
  for (NodeId w : g.neighbors(v)) {
    if (colors[w] != kUncolored && colors[w] <= palette) {
      used[colors[w]] = 1;
    }
  }
  for (Color c = 1; c <= palette; ++c) {
    if (!used[c]) {
      return c;
    }
  }
  return kUncolored;
}

std::vector<std::uint64_t> identity_ids(std::size_t n) {
  std::vector<std::uint64_t> ids(n);
  std::iota(ids.begin(), ids.end(), std::uint64_t{0});
  return ids;
}

}  // namespace

const char* to_string(RandVariant v) {
  return v == RandVariant::kLargeDelta ? "large" : "small";
}

std::uint32_t large_delta_r(std::size_t delta) {
  if (delta < 4) {
    throw Error(ErrorCode::kParamUnsupported, "large-Delta variant needs Delta >= 4");
  }
  const double ld = std::log(static_cast<double>(delta));
  const double lgrow = std::log(static_cast<double>(delta - 2));
  for (std::uint32_t r = 2; r < 100000; r += 2) {
    const double lhs = (r / 2.0) * lgrow - 12.0 * ld - std::log(12.0);
    const double rhs = std::log((4.0 * r + 32.0) * ld);
    if (lhs >= rhs) {
      return r;
    }
  }
  throw Error(ErrorCode::kInternal, "no radius satisfies the shattering inequality");
}

std::uint32_t small_delta_r(std::size_t n, double c) {
  double loglog = 1.0;
  if (n >= 4) {
    loglog = std::log2(std::log2(static_cast<double>(n)));
  }
  auto r = static_cast<std::uint32_t>(std::ceil(c * loglog - 1e-9));
  r = std::max<std::uint32_t>(r, 6);
  return (r + 5) / 6 * 6;
}

std::uint64_t default_component_cap(std::size_t n, std::size_t delta, std::uint32_t b) {
  const double log_n = std::max(1.0, std::log2(static_cast<double>(std::max<std::size_t>(n, 2))));
  const double value = std::pow(static_cast<double>(delta), 2.0 * b) * log_n;
  if (!(value < 1.8e19)) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(std::ceil(value));
}

std::uint32_t small_component_radius(std::uint64_t cap, std::size_t delta, std::uint32_t fallback) {
  if (delta <= 3) {
    return fallback;
  }
  const double value = 2.0 * std::log(static_cast<double>(cap)) / std::log(static_cast<double>(delta - 2)) + 1.0;
  if (value >= fallback) {
    return fallback;
  }
  return static_cast<std::uint32_t>(std::ceil(value - 1e-9));
}

RandParams rand_params(std::size_t n, std::size_t delta, RandVariant variant, const RandConfig& config) {
  RandParams params;
  if (variant == RandVariant::kLargeDelta) {
    if (delta < 4) {
      throw Error(ErrorCode::kParamUnsupported, "large-Delta variant needs Delta >= 4, got " + std::to_string(delta));
    }
    params.marking.b = config.b.value_or(6);
    params.marking.r = config.r ? *config.r : large_delta_r(delta);
  } else {
    if (delta < 3 || delta > config.small_delta_cap) {
      throw Error(ErrorCode::kParamUnsupported, "small-Delta variant covers Delta in 3.." +
                                                    std::to_string(config.small_delta_cap) + ", got " +
                                                    std::to_string(delta));
    }
    params.marking.b = config.b.value_or(12);
    params.marking.r = config.r ? *config.r : small_delta_r(n, config.small_delta_c);
  }
  params.marking.p = config.p.value_or(std::pow(static_cast<double>(delta), -static_cast<double>(params.marking.b)));
  if (!(params.marking.p > 0.0 && params.marking.p <= 1.0)) {
    throw Error(ErrorCode::kParamUnsupported, "selection probability must lie in (0, 1]");
  }
  params.beta = 6 * params.marking.r;
  params.s = params.beta * (params.marking.r + 1);
  params.component_cap = config.component_cap.value_or(default_component_cap(n, delta, params.marking.b));
  params.r_small = small_component_radius(params.component_cap, delta, static_cast<std::uint32_t>(std::max<std::size_t>(n, 1)));
  return params;
}

PhaseOne remove_small_dccs(const Graph& g, const RandParams& params) {
  const std::size_t n = g.num_nodes();
  const std::uint32_t r = params.marking.r;
  PhaseOne out;
  out.in_h.assign(n, 1);
  DccFinder finder(g);
  std::map<std::vector<NodeId>, std::uint32_t> index;
  std::vector<std::vector<NodeId>> groups;
  std::vector<NodeId> selecting;
  // A node inside an already chosen component is contained in a short one,
  // so it reuses that component instead of searching its own ball.
  std::vector<char> covered(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (covered[v]) {
      selecting.push_back(v);
      continue;
    }
    auto found = finder.find(v, r);
    if (!found) {
      continue;
    }
    selecting.push_back(v);
    for (NodeId u : *found) {
      covered[u] = 1;
    }
    if (index.try_emplace(*found, static_cast<std::uint32_t>(groups.size())).second) {
      groups.push_back(std::move(*found));
    }
  }
  out.selecting = selecting.size();
  out.rounds = r;
  if (groups.empty()) {
    return out;
  }
  const auto ruling = group_ruling_set(g, groups, 1);
  // One round on the virtual graph costs a sweep across two neighboring
  // components plus the edge between them.
  out.rounds += ruling.rounds * (2 * static_cast<std::size_t>(r) + 1);
  std::vector<NodeId> base;
  for (auto gi : ruling.chosen) {
    out.base_dccs.push_back(groups[gi]);
    base.insert(base.end(), groups[gi].begin(), groups[gi].end());
  }
  auto layers = distance_layers(g, base);
  std::vector<std::uint32_t> dist(n, kUnreached);
  for (std::uint32_t i = 0; i < layers.layers.size(); ++i) {
    for (NodeId v : layers.layers[i]) {
      dist[v] = i;
    }
  }
  std::uint32_t needed = 0;
  for (NodeId v : selecting) {
    needed = std::max(needed, dist[v]);
  }
  const std::uint32_t s = std::max(params.s, needed);
  out.extended = needed > params.s;
  if (layers.layers.size() > static_cast<std::size_t>(s) + 1) {
    layers.layers.resize(static_cast<std::size_t>(s) + 1);
  }
  out.rounds += layers.depth();
  for (const auto& layer : layers.layers) {
    for (NodeId v : layer) {
      out.in_h[v] = 0;
    }
  }
  out.layers = std::move(layers);
  return out;
}

MarkingOutcome marking_process(const Graph& g, const MarkingParams& params, std::uint64_t seed,
                               const std::vector<char>& in_h, std::span<const std::uint64_t> ids) {
  const std::size_t n = g.num_nodes();
  const auto members = all_members(g, in_h);
  auto id_of = [&](NodeId v) -> std::uint64_t { return ids.empty() ? v : ids[v]; };
  MarkingOutcome out;
  out.status.assign(n, MarkStatus::kPlain);
  out.rounds = params.b + 2;
  std::vector<char> selected(n, 0);
  std::vector<NodeId> chosen;
  for (NodeId v = 0; v < n; ++v) {
    if (members[v] && node_stream(seed, id_of(v), kSelectRound).bernoulli(params.p)) {
      selected[v] = 1;
      chosen.push_back(v);
    }
  }
  out.selected = chosen.size();
  MaskedBfs bfs(g, members);
  std::vector<NodeId> survivors;
  for (NodeId v : chosen) {
    const bool crowded =
        bfs.search(v, params.b, [&](NodeId u, std::uint32_t) { return u != v && selected[u] != 0; });
    if (!crowded) {
      survivors.push_back(v);
    }
  }
  for (NodeId v : survivors) {
    std::vector<NodeId> nbrs;
    for (NodeId w : g.neighbors(v)) {
      if (members[w]) {
        nbrs.push_back(w);
      }
    }
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (!g.has_edge(nbrs[i], nbrs[j])) {
          pairs.emplace_back(nbrs[i], nbrs[j]);
        }
      }
    }
    if (pairs.empty()) {
      continue;  // the neighborhood is a clique: nothing to mark
    }
    auto rng = node_stream(seed, id_of(v), kPairRound);
    const auto [a, b] = pairs[rng.uniform(pairs.size())];
    out.status[v] = MarkStatus::kTNode;
    out.status[a] = MarkStatus::kMarked;
    out.status[b] = MarkStatus::kMarked;
    out.tnodes.push_back(v);
    out.marked.push_back(a);
    out.marked.push_back(b);
  }
  std::sort(out.marked.begin(), out.marked.end());
  return out;
}

HappyLayers build_happy_layers(const Graph& g, const MarkingOutcome& outcome, const MarkingParams& params,
                               const std::vector<char>& in_h, std::size_t delta) {
  const std::size_t n = g.num_nodes();
  const auto members = all_members(g, in_h);
  if (delta == 0) {
    delta = g.max_degree();
  }
  HappyLayers out;
  std::vector<char> uncolored(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    uncolored[v] = members[v] && outcome.status[v] != MarkStatus::kMarked;
  }
  // Happy: an uncolored path of length <= r to a T-node.
  const auto happy_layers = distance_layers(g, outcome.tnodes, params.r, uncolored);
  std::vector<char> in_s(n, 0);
  collect(happy_layers, in_s);
  out.happy = happy_layers.covered();

  for (NodeId v = 0; v < n; ++v) {
    if (!members[v]) {
      continue;
    }
    std::size_t deg_h = 0;
    for (NodeId w : g.neighbors(v)) {
      deg_h += members[w] ? 1 : 0;
    }
    if (deg_h < delta) {
      out.boundary.push_back(v);
    }
  }
  // Everything within r of the boundary joins, and marks there lose their color.
  const auto near = distance_layers(g, out.boundary, params.r, members);
  std::vector<char> near_mask(n, 0);
  collect(near, near_mask);
  for (NodeId v : outcome.marked) {
    if (!near_mask[v]) {
      out.kept_marks.push_back(v);
    }
  }
  const auto kept = mask_of(n, out.kept_marks);

  std::vector<NodeId> c0 = out.boundary;
  for (NodeId t : outcome.tnodes) {
    std::size_t marks = 0;
    for (NodeId w : g.neighbors(t)) {
      marks += kept[w] ? 1 : 0;
    }
    if (marks == 2) {
      c0.push_back(t);
    }
  }
  std::vector<char> inside(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    inside[v] = (in_s[v] || near_mask[v]) && !kept[v];
  }
  out.layers = distance_layers(g, c0, kUnreached, inside);
  std::vector<char> layered(n, 0);
  collect(out.layers, layered);
  for (NodeId v = 0; v < n; ++v) {
    if (members[v] && !layered[v] && !kept[v]) {
      out.leftover.push_back(v);
    }
  }
  out.rounds = 2 * static_cast<std::size_t>(params.r) + out.layers.depth();
  return out;
}

SmallComponentStats color_small_components(const Graph& g, std::span<const NodeId> leftover, Coloring& colors,
                                           const RandParams& params, std::uint64_t seed,
                                           std::span<const std::uint64_t> ids) {
  SmallComponentStats stats;
  if (leftover.empty()) {
    return stats;
  }
  const std::size_t n = g.num_nodes();
  const Color delta = static_cast<Color>(g.max_degree());
  const auto in_l = mask_of(n, leftover);
  std::vector<char> done(n, 0);
  LayeredConfig config;
  config.mode = ListMode::kRandomized;
  config.seed = seed;
  config.ids = ids;
  for (NodeId start : leftover) {
    if (done[start]) {
      continue;
    }
    auto component = distance_layers(g, std::span<const NodeId>(&start, 1), kUnreached, in_l);
    std::vector<NodeId> nodes;
    for (const auto& layer : component.layers) {
      nodes.insert(nodes.end(), layer.begin(), layer.end());
    }
    std::sort(nodes.begin(), nodes.end());
    for (NodeId v : nodes) {
      done[v] = 1;
    }
    ++stats.components;
    stats.max_component = std::max(stats.max_component, nodes.size());
    if (nodes.size() > params.component_cap) {
      throw Error(ErrorCode::kComponentTooLarge, "leftover component of " + std::to_string(nodes.size()) +
                                                     " nodes exceeds the cap " +
                                                     std::to_string(params.component_cap));
    }
    const Subgraph sub = induced_subgraph(g, nodes);
    const auto radius = std::min<std::uint32_t>(params.r_small, static_cast<std::uint32_t>(nodes.size()));

    // Free nodes and short degree-choosable components form the virtual graph.
    std::vector<std::vector<NodeId>> groups;
    std::vector<char> is_free;
    for (NodeId local = 0; local < nodes.size(); ++local) {
      const NodeId v = sub.to_parent[local];
      bool free = g.degree(v) < delta;
      for (NodeId w : g.neighbors(v)) {
        free = free || (!in_l[w] && colors[w] == kUncolored);
      }
      if (free) {
        groups.push_back({local});
        is_free.push_back(1);
      }
    }
    DccFinder finder(sub.graph);
    std::map<std::vector<NodeId>, std::uint32_t> index;
    for (NodeId local = 0; local < nodes.size(); ++local) {
      if (auto found = finder.find(local, radius)) {
        if (index.try_emplace(*found, 0).second) {
          groups.push_back(std::move(*found));
          is_free.push_back(0);
        }
      }
    }
    if (groups.empty()) {
      stats.unresolved += nodes.size();
      continue;
    }
    const auto ruling = group_ruling_set(sub.graph, groups, 1);
    std::vector<NodeId> base;
    for (auto gi : ruling.chosen) {
      base.insert(base.end(), groups[gi].begin(), groups[gi].end());
    }
    const auto local_layers = distance_layers(sub.graph, base);
    stats.max_layers = std::max(stats.max_layers, local_layers.layers.size());
    LayerDecomposition layers;
    for (const auto& layer : local_layers.layers) {
      auto& out = layers.layers.emplace_back();
      for (NodeId local : layer) {
        out.push_back(sub.to_parent[local]);
      }
    }
    std::size_t rounds = radius + ruling.rounds * (2 * static_cast<std::size_t>(radius) + 1) + layers.depth();
    for (std::size_t i = layers.layers.size(); i-- > 1;) {
      rounds += color_layer(g, layers.layers[i], delta, colors, config, i);
    }
    for (auto gi : ruling.chosen) {
      std::vector<NodeId> piece;
      for (NodeId local : groups[gi]) {
        piece.push_back(sub.to_parent[local]);
      }
      if (is_free[gi]) {
        colors[piece[0]] = smallest_free(g, piece[0], colors, delta);
        stats.unresolved += colors[piece[0]] == kUncolored ? 1 : 0;
      } else if (!color_piece(g, piece, colors, delta)) {
        stats.unresolved += piece.size();
      }
    }
    rounds += 2 * static_cast<std::size_t>(radius) + 1;
    stats.rounds = std::max(stats.rounds, rounds);
  }
  return stats;
}

std::string to_json(const ShatteringStats& stats) {
  nlohmann::ordered_json j;
  j["seed"] = stats.seed;
  j["n"] = stats.n;
  j["delta"] = stats.delta;
  j["variant"] = to_string(stats.variant);
  j["r"] = stats.r;
  j["b"] = stats.b;
  j["unhappy_fraction"] = stats.unhappy_fraction;
  j["max_component"] = stats.max_component;
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (const auto& [size, count] : stats.component_histogram) {
    hist[std::to_string(size)] = count;
  }
  j["component_histogram"] = hist;
  return j.dump(2) + "\n";
}

namespace {

void fill_components(const Graph& g, std::span<const NodeId> leftover, ShatteringStats& stats) {
  stats.leftover = leftover.size();
  stats.unhappy_fraction =
      stats.h_size == 0 ? 0.0 : static_cast<double>(leftover.size()) / static_cast<double>(stats.h_size);
  const auto in_l = mask_of(g.num_nodes(), leftover);
  std::vector<char> done(g.num_nodes(), 0);
  for (NodeId start : leftover) {
    if (done[start]) {
      continue;
    }
    const auto comp = distance_layers(g, std::span<const NodeId>(&start, 1), kUnreached, in_l);
    for (const auto& layer : comp.layers) {
      for (NodeId v : layer) {
        done[v] = 1;
      }
    }
    const std::size_t size = comp.covered();
    ++stats.component_histogram[size];
    stats.max_component = std::max(stats.max_component, size);
  }
}

}  // namespace

RandResult run_randomized(const Graph& g, RandVariant variant, std::uint64_t seed, const RandConfig& config) {
  if (!is_nice(g)) {
    throw Error(ErrorCode::kNotNice, "graph must be connected and not a path, cycle or clique");
  }
  const auto start = Clock::now();
  const std::size_t n = g.num_nodes();
  const Color delta = static_cast<Color>(g.max_degree());
  RandResult result;
  result.params = rand_params(n, delta, variant, config);
  const auto& params = result.params;
  result.report.algorithm = variant == RandVariant::kLargeDelta ? "rand" : "rand-small";
  result.report.seed = seed;
  result.report.n = n;
  result.report.delta = delta;
  const auto ids = identity_ids(n);

  // Phase I
  const auto phase_one = remove_small_dccs(g, params);
  result.phase_one_extended = phase_one.extended;
  result.report.charge("dcc_removal", phase_one.rounds);

  // Phase II
  const auto marking = marking_process(g, params.marking, seed, phase_one.in_h, ids);
  result.tnodes = marking.tnodes.size();
  result.report.charge("marking", marking.rounds);
  const auto happy = build_happy_layers(g, marking, params.marking, phase_one.in_h, delta);
  result.report.charge("happy_layers", happy.rounds);
  Coloring& colors = result.colors;
  colors.assign(n, kUncolored);
  for (NodeId v : happy.kept_marks) {
    colors[v] = 1;
  }
  const auto small = color_small_components(g, happy.leftover, colors, params, seed, ids);
  result.report.charge("small_components", small.rounds);

  auto& stats = result.stats;
  stats.seed = seed;
  stats.n = n;
  stats.delta = delta;
  stats.variant = variant;
  stats.r = params.marking.r;
  stats.b = params.marking.b;
  stats.h_size = static_cast<std::size_t>(std::count(phase_one.in_h.begin(), phase_one.in_h.end(), 1));
  fill_components(g, happy.leftover, stats);

  LayeredConfig layer_config;
  layer_config.mode = ListMode::kRandomized;
  layer_config.seed = seed;
  layer_config.ids = ids;

  // Phase III
  std::size_t rounds = 0;
  for (std::size_t i = happy.layers.layers.size(); i-- > 1;) {
    rounds += color_layer(g, happy.layers.layers[i], delta, colors, layer_config, i);
  }
  if (!happy.layers.layers.empty()) {
    for (NodeId v : happy.layers.layers[0]) {
      if (colors[v] == kUncolored && smallest_free(g, v, colors, delta) == kUncolored) {
        ++result.c0_without_free_color;
      }
    }
    rounds += color_layer(g, happy.layers.layers[0], delta, colors, layer_config, 0);
  }
  result.report.charge("c_layers", rounds);

  // Phase IV
  rounds = 0;
  for (std::size_t i = phase_one.layers.layers.size(); i-- > 1;) {
    rounds += color_layer(g, phase_one.layers.layers[i], delta, colors, layer_config, i);
  }
  result.report.charge("b_layers", rounds);
  for (const auto& piece : phase_one.base_dccs) {
    color_piece(g, piece, colors, delta);
  }
  result.report.charge("b0", 2 * static_cast<std::size_t>(params.marking.r) + 1);

  // Anything still open is finished by the token walk.
  rounds = 0;
  for (NodeId v = 0; v < n; ++v) {
    if (colors[v] == kUncolored) {
      rounds += complete_at(g, colors, v, static_cast<std::uint32_t>(n)).rounds;
      ++result.repairs;
    }
  }
  if (result.repairs > 0) {
    result.report.charge("repair", rounds);
  }
  result.report.valid = verify(g, colors, delta).ok();
  result.report.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return result;
}

std::vector<ShatteringStats> shattering_stats(const Graph& h, const MarkingParams& params,
                                              std::span<const std::uint64_t> seeds, RandVariant variant,
                                              std::size_t delta) {
  if (delta == 0) {
    delta = h.max_degree();
  }
  std::vector<ShatteringStats> out;
  for (std::uint64_t seed : seeds) {
    ShatteringStats stats;
    stats.seed = seed;
    stats.n = h.num_nodes();
    stats.delta = delta;
    stats.variant = variant;
    stats.r = params.r;
    stats.b = params.b;
    stats.h_size = h.num_nodes();
    const auto marking = marking_process(h, params, seed);
    const auto happy = build_happy_layers(h, marking, params, {}, delta);
    fill_components(h, happy.leftover, stats);
    out.push_back(std::move(stats));
  }
  return out;
}

}  // namespace deltacolor
