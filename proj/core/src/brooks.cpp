#include "deltacolor/brooks.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "deltacolor/errors.hpp"
#include "deltacolor/structure.hpp"

namespace deltacolor {
namespace {

class ListSolver {
 public:
  ListSolver(const Graph& g, const ListAssignment& lists) : g_(g), domain_(lists), colors_(g.num_nodes(), kUncolored) {}

  std::optional<Coloring> solve() {
    for (const auto& d : domain_) {
      if (d.empty()) {
        return std::nullopt;
      }
    }
    if (!search(g_.num_nodes())) {
      return std::nullopt;
    }
    return colors_;
  }

 private:
  bool search(std::size_t remaining) {
    if (remaining == 0) {
      return true;
    }
    if (++steps_ > kStepBudget) {
      throw Error(ErrorCode::kInternal, "list coloring search exceeded its step budget");
    }
    NodeId v = kNoNode;
    for (NodeId u = 0; u < g_.num_nodes(); ++u) {
      if (colors_[u] == kUncolored && (v == kNoNode || domain_[u].size() < domain_[v].size())) {
        v = u;
      }
    }
    const ColorList options = domain_[v];
    for (Color c : options) {
      colors_[v] = c;
      std::vector<NodeId> pruned;
      bool dead = false;
      for (NodeId w : g_.neighbors(v)) {
        if (colors_[w] != kUncolored) {
          continue;
        }
        auto it = std::find(domain_[w].begin(), domain_[w].end(), c);
        if (it != domain_[w].end()) {
          domain_[w].erase(it);
          pruned.push_back(w);
          dead = dead || domain_[w].empty();
        }
      }
      if (!dead && search(remaining - 1)) {
        return true;
      }
      for (NodeId w : pruned) {
        auto& d = domain_[w];
        d.insert(std::lower_bound(d.begin(), d.end(), c), c);
      }
      colors_[v] = kUncolored;
    }
    return false;
  }

  static constexpr std::size_t kStepBudget = 50'000'000;
  const Graph& g_;
  ListAssignment domain_;
  Coloring colors_;
  std::size_t steps_ = 0;
};

Color smallest_free(const Graph& g, const Coloring& colors, NodeId u, Color palette) {
  std::vector<char> used(palette + 1, 0);
  for (NodeId w : g.neighbors(u)) {
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

// Induced subgraph on the ball of radius d, given BFS levels.
Subgraph ball_subgraph(const Graph& g, const BfsStructure& b, std::uint32_t d) {
  std::vector<NodeId> nodes;
  for (std::uint32_t t = 0; t <= d && t < b.levels.size(); ++t) {
    nodes.insert(nodes.end(), b.levels[t].begin(), b.levels[t].end());
  }
  return induced_subgraph(g, nodes);
}

// Non-Gallai blocks of a graph, as local node lists.
std::vector<std::vector<NodeId>> dcc_blocks(const Graph& h) {
  std::vector<std::vector<NodeId>> out;
  for (auto& block : block_decomposition(h).blocks) {
    if (block.size() >= 4 && classify_block(h, block) == ComponentClass::kDcc) {
      out.push_back(std::move(block));
    }
  }
  return out;
}

// A small degree-choosable component containing `root` inside block graph h.
std::vector<NodeId> small_dcc(const Graph& h, NodeId root) {
  if (auto cycle = even_cycle_through(h, root)) {
    return *cycle;
  }
  DccFinder finder(h);
  const std::uint32_t limit = graph_radius(h) * 2 + 1;
  for (std::uint32_t r = 2; r <= limit; ++r) {
    if (auto s = finder.find(root, r)) {
      return *s;
    }
  }
  std::vector<NodeId> all(h.num_nodes());
  for (NodeId i = 0; i < all.size(); ++i) {
    all[i] = i;
  }
  return all;
}

}  // namespace

std::uint32_t brooks_radius(std::size_t n, std::size_t delta) {
  if (n <= 1 || delta < 3) {
    return 0;
  }
  return static_cast<std::uint32_t>(std::ceil(2.0 * std::log(static_cast<double>(n)) /
                                              std::log(static_cast<double>(delta - 1)) - 1e-12));
}

std::optional<Coloring> solve_lists(const Graph& g, const ListAssignment& lists) {
  return ListSolver(g, lists).solve();
}

BrooksOutcome complete_at(const Graph& g, Coloring& colors, NodeId v, std::uint32_t radius) {
  const Color palette = static_cast<Color>(g.max_degree());
  const Coloring before = colors;
  BrooksOutcome outcome;
  auto finish = [&](const BfsStructure* b) {
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      if (colors[u] != before[u] || u == v) {
        outcome.changed.push_back(u);
      }
    }
    if (b != nullptr) {
      for (NodeId u : outcome.changed) {
        outcome.change_radius = std::max(outcome.change_radius, b->depth[u]);
      }
    }
    return outcome;
  };
  if (Color c = smallest_free(g, colors, v, palette)) {
    colors[v] = c;
    outcome.rounds = 1;
    return finish(nullptr);
  }

  const BfsStructure b = bfs_layers(g, v, radius);
  const std::uint32_t reach = static_cast<std::uint32_t>(b.levels.size() - 1);

  // nearest node of degree < Delta
  std::uint32_t low_dist = kUnreached;
  NodeId low = kNoNode;
  for (std::uint32_t t = 0; t <= reach && low == kNoNode; ++t) {
    for (NodeId u : b.levels[t]) {
      if (g.degree(u) < palette) {
        low = u;
        low_dist = t;
        break;
      }
    }
  }
  // smallest radius whose ball has a non-Gallai block; monotone in d
  const std::uint32_t dcc_cap = std::min(reach, low_dist == kUnreached ? reach : low_dist);
  std::uint32_t lo = 1;
  std::uint32_t hi = dcc_cap + 1;  // hi = dcc_cap + 1 means none
  auto has_dcc = [&](std::uint32_t d) { return !is_gallai_forest(ball_subgraph(g, b, d).graph); };
  if (dcc_cap >= 1 && has_dcc(dcc_cap)) {
    hi = dcc_cap;
    while (lo < hi) {
      const std::uint32_t mid = lo + (hi - lo) / 2;
      if (has_dcc(mid)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
  }
  NodeId target = low;
  std::uint32_t target_dist = low_dist;
  std::vector<NodeId> dcc;
  if (hi <= dcc_cap) {
    const Subgraph sub = ball_subgraph(g, b, hi);
    const auto blocks = dcc_blocks(sub.graph);
    // nearest node on any non-Gallai block, ties by id
    NodeId best = kNoNode;
    std::size_t best_block = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (NodeId local : blocks[i]) {
        const NodeId u = sub.to_parent[local];
        if (best == kNoNode || b.depth[u] < b.depth[best] || (b.depth[u] == b.depth[best] && u < best)) {
          best = u;
          best_block = i;
        }
      }
    }
    if (best != kNoNode && b.depth[best] < target_dist) {
      target = best;
      target_dist = b.depth[best];
      const Subgraph block = induced_subgraph(sub.graph, blocks[best_block]);
      for (NodeId local : small_dcc(block.graph, block.to_local(sub.to_local(best)))) {
        dcc.push_back(sub.to_parent[block.to_parent[local]]);
      }
      std::sort(dcc.begin(), dcc.end());
    }
  }
  if (target == kNoNode) {
    throw Error(ErrorCode::kInternal, "no node of degree < Delta and no degree-choosable component within " +
                                          std::to_string(radius) + " hops of node " + std::to_string(v));
  }

  // walk the token along the tree path v -> target
  std::vector<NodeId> path = b.path_to_root(target);
  std::reverse(path.begin(), path.end());
  NodeId token = v;
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (Color c = smallest_free(g, colors, token, palette)) {
      colors[token] = c;
      outcome.rounds = 2 * target_dist + 1;
      return finish(&b);
    }
    colors[token] = colors[path[i]];
    colors[path[i]] = kUncolored;
    token = path[i];
    ++outcome.token_moves;
  }
  if (Color c = smallest_free(g, colors, token, palette)) {
    colors[token] = c;
  } else {
    if (dcc.empty()) {
      throw Error(ErrorCode::kInternal, "token reached a node without a free color");
    }
    std::vector<char> in_dcc(g.num_nodes(), 0);
    for (NodeId u : dcc) {
      in_dcc[u] = 1;
      colors[u] = kUncolored;
    }
    const Subgraph sub = induced_subgraph(g, dcc);
    ListAssignment lists(dcc.size());
    std::vector<char> used(palette + 1, 0);
    for (NodeId local = 0; local < dcc.size(); ++local) {
      std::fill(used.begin(), used.end(), 0);
      for (NodeId w : g.neighbors(sub.to_parent[local])) {
        if (!in_dcc[w] && colors[w] != kUncolored) {
          used[colors[w]] = 1;
        }
      }
      for (Color c = 1; c <= palette; ++c) {
        if (!used[c]) {
          lists[local].push_back(c);
        }
      }
    }
    const auto solved = solve_lists(sub.graph, lists);
    if (!solved) {
      throw Error(ErrorCode::kInternal, "degree-choosable component has no list coloring");
    }
    for (NodeId local = 0; local < dcc.size(); ++local) {
      colors[sub.to_parent[local]] = (*solved)[local];
    }
    outcome.dcc_size = dcc.size();
  }
  outcome.rounds = 2 * target_dist + 1;
  return finish(&b);
}

BrooksResult complete_one_uncolored(const Graph& g, const Coloring& partial) {
  if (!is_nice(g)) {
    throw Error(ErrorCode::kNotNice, "graph is a path, a cycle, a clique or disconnected");
  }
  const Color palette = static_cast<Color>(g.max_degree());
  if (partial.size() != g.num_nodes()) {
    throw Error(ErrorCode::kBadPartial, "coloring has " + std::to_string(partial.size()) + " entries for " +
                                            std::to_string(g.num_nodes()) + " nodes");
  }
  NodeId hole = kNoNode;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    if (partial[u] == kUncolored) {
      if (hole != kNoNode) {
        throw Error(ErrorCode::kBadPartial, "more than one uncolored node");
      }
      hole = u;
    } else if (partial[u] > palette) {
      throw Error(ErrorCode::kBadPartial, "node " + std::to_string(u) + " has color outside 1.." + std::to_string(palette));
    }
  }
  if (hole == kNoNode) {
    throw Error(ErrorCode::kBadPartial, "no uncolored node");
  }
  if (!is_proper_partial(g, partial)) {
    throw Error(ErrorCode::kBadPartial, "partial coloring is not proper");
  }
  BrooksResult result;
  result.radius_bound = brooks_radius(g.num_nodes(), g.max_degree());
  result.colors = partial;
  result.outcome = complete_at(g, result.colors, hole, result.radius_bound);
  return result;
}

}  // namespace deltacolor
