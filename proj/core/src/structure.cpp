#include "deltacolor/structure.hpp"

#include <algorithm>
#include <tuple>
#include <string>

#include "deltacolor/errors.hpp"

namespace deltacolor {

std::size_t BfsStructure::up_degree(const Graph& g, NodeId u) const {
  if (depth[u] == kUnreached || depth[u] == 0) {
    return 0;
  }
  std::size_t count = 0;
  for (NodeId w : g.neighbors(u)) {
    count += depth[w] + 1 == depth[u] ? 1 : 0;
  }
  return count;
}

std::vector<NodeId> BfsStructure::path_to_root(NodeId u) const {
  std::vector<NodeId> path;
  for (NodeId x = u; x != kNoNode; x = parent[x]) {
    path.push_back(x);
  }
  return path;
}

BfsStructure bfs_layers(const Graph& g, NodeId root, std::uint32_t max_depth) {
  BfsStructure s;
  s.root = root;
  s.depth = bfs_distances(g, std::span<const NodeId>(&root, 1), max_depth);
  s.parent.assign(g.num_nodes(), kNoNode);
  s.child_count.assign(g.num_nodes(), 0);
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    const std::uint32_t d = s.depth[u];
    if (d == kUnreached) {
      continue;
    }
    if (s.levels.size() <= d) {
      s.levels.resize(d + 1);
    }
    s.levels[d].push_back(u);
    if (d == 0) {
      continue;
    }
    for (NodeId w : g.neighbors(u)) {  // ascending, so the first hit is the smallest
      if (s.depth[w] + 1 == d) {
        s.parent[u] = w;
        ++s.child_count[w];
        break;
      }
    }
  }
  return s;
}

BlockDecomposition block_decomposition(const Graph& g) {
  const std::size_t n = g.num_nodes();
  BlockDecomposition out;
  std::vector<std::uint32_t> disc(n, kUnreached);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<std::size_t> next_edge(n, 0);
  std::vector<NodeId> parent(n, kNoNode);
  std::vector<char> is_cut(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<NodeId> dfs;
  std::uint32_t timer = 0;

  for (NodeId root = 0; root < n; ++root) {
    if (disc[root] != kUnreached) {
      continue;
    }
    disc[root] = low[root] = timer++;
    dfs.push_back(root);
    std::size_t root_children = 0;
    while (!dfs.empty()) {
      const NodeId u = dfs.back();
      const auto nbrs = g.neighbors(u);
      if (next_edge[u] < nbrs.size()) {
        const NodeId w = nbrs[next_edge[u]++];
        if (disc[w] == kUnreached) {
          parent[w] = u;
          disc[w] = low[w] = timer++;
          edge_stack.emplace_back(u, w);
          dfs.push_back(w);
          if (u == root) {
            ++root_children;
          }
        } else if (w != parent[u] && disc[w] < disc[u]) {
          low[u] = std::min(low[u], disc[w]);
          edge_stack.emplace_back(u, w);
        }
        continue;
      }
      dfs.pop_back();
      const NodeId p = parent[u];
      if (p == kNoNode) {
        continue;
      }
      low[p] = std::min(low[p], low[u]);
      if (low[u] >= disc[p]) {
        if (p != root) {
          is_cut[p] = 1;
        }
        std::vector<NodeId> block;
        while (!edge_stack.empty()) {
          const Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.first);
          block.push_back(e.second);
          if (e.first == p && e.second == u) {
            break;
          }
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        out.blocks.push_back(std::move(block));
      }
    }
    if (root_children >= 2) {
      is_cut[root] = 1;
    }
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  for (NodeId v = 0; v < n; ++v) {
    if (is_cut[v]) {
      out.cut_vertices.push_back(v);
    }
  }
  return out;
}

const char* to_string(ComponentClass c) {
  switch (c) {
    case ComponentClass::kClique: return "Clique";
    case ComponentClass::kOddCycle: return "OddCycle";
    case ComponentClass::kDcc: return "Dcc";
    case ComponentClass::kBridgeEdge: return "BridgeEdge";
  }
  return "?";
}

ComponentClass classify_two_connected(const Graph& b) {
  const std::size_t k = b.num_nodes();
  if (k == 2) {
    return ComponentClass::kBridgeEdge;
  }
  if (b.num_edges() == k * (k - 1) / 2) {
    return ComponentClass::kClique;
  }
  if (k % 2 == 1 && b.max_degree() == 2) {
    return ComponentClass::kOddCycle;
  }
  return ComponentClass::kDcc;
}

ComponentClass classify_block(const Graph& g, std::span<const NodeId> block) {
  std::vector<NodeId> nodes(block.begin(), block.end());
  std::sort(nodes.begin(), nodes.end());
  if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end() || nodes.size() < 2 ||
      nodes.back() >= g.num_nodes()) {
    throw Error(ErrorCode::kNotABlock, "block must hold at least two distinct valid nodes");
  }
  const Subgraph sub = induced_subgraph(g, nodes);
  if (nodes.size() == 2) {
    if (sub.graph.num_edges() != 1) {
      throw Error(ErrorCode::kNotABlock, "two-node block is not an edge");
    }
    return ComponentClass::kBridgeEdge;
  }
  const BlockDecomposition bd = block_decomposition(sub.graph);
  if (bd.blocks.size() != 1 || bd.blocks.front().size() != nodes.size()) {
    throw Error(ErrorCode::kNotABlock, "node set is not 2-connected");
  }
  return classify_two_connected(sub.graph);
}

namespace {

bool all_blocks_gallai(const Graph& g) {
  for (const auto& block : block_decomposition(g).blocks) {
    if (block.size() <= 2) {
      continue;
    }
    if (classify_two_connected(induced_subgraph(g, block).graph) == ComponentClass::kDcc) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool is_gallai_forest(const Graph& g) { return all_blocks_gallai(g); }

bool ball_is_dcc_free(const Graph& g, NodeId v, std::uint32_t r) {
  const auto nodes = ball(g, v, r);
  return all_blocks_gallai(induced_subgraph(g, nodes).graph);
}

bool is_nice(const Graph& g) {
  const std::size_t n = g.num_nodes();
  if (n <= 2 || !is_connected(g)) {
    return false;
  }
  const std::size_t m = g.num_edges();
  if (m == n * (n - 1) / 2) {
    return false;  // complete
  }
  if (g.max_degree() <= 2) {
    return false;  // connected with max degree 2: path or cycle
  }
  return true;
}

std::uint32_t graph_radius(const Graph& g) {
  std::uint32_t best = kUnreached;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const auto dist = bfs_distances(g, std::span<const NodeId>(&v, 1));
    const std::uint32_t ecc = *std::max_element(dist.begin(), dist.end());
    best = std::min(best, ecc);
  }
  return best == kUnreached ? 0 : best;
}

std::optional<std::vector<NodeId>> even_cycle_through(const Graph& g, NodeId root) {
  const std::size_t n = g.num_nodes();
  std::vector<std::uint32_t> depth(n, kUnreached);
  std::vector<NodeId> parent(n, kNoNode);
  std::vector<NodeId> branch(n, kNoNode);
  std::vector<NodeId> order{root};
  depth[root] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const NodeId u = order[head];
    for (NodeId w : g.neighbors(u)) {
      if (depth[w] == kUnreached) {
        depth[w] = depth[u] + 1;
        parent[w] = u;
        branch[w] = u == root ? w : branch[u];
        order.push_back(w);
      }
    }
  }
  struct Candidate {
    std::uint32_t length;
    NodeId x, y;
    auto operator<=>(const Candidate&) const = default;
  };
  std::vector<Candidate> candidates;
  for (NodeId x : order) {
    if (x == root) {
      continue;
    }
    for (NodeId y : g.neighbors(x)) {
      if (y == root || depth[y] != depth[x] + 1 || branch[x] == branch[y]) {
        continue;
      }
      candidates.push_back({depth[x] + depth[y] + 1, x, y});
    }
  }
  std::sort(candidates.begin(), candidates.end());
  for (const auto& c : candidates) {
    std::vector<NodeId> nodes;
    for (NodeId a = c.x; a != kNoNode; a = parent[a]) {
      nodes.push_back(a);
    }
    for (NodeId a = c.y; a != root; a = parent[a]) {
      nodes.push_back(a);
    }
    std::sort(nodes.begin(), nodes.end());
    const Subgraph sub = induced_subgraph(g, nodes);
    if (classify_two_connected(sub.graph) == ComponentClass::kDcc) {
      return nodes;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<NodeId>> find_dcc_within_radius(const Graph& g, NodeId v, std::uint32_t r) {
  DccFinder finder(g);
  return finder.find(v, r);
}

DccFinder::DccFinder(const Graph& g)
    : g_(&g), stamp_(g.num_nodes(), 0), depth_(g.num_nodes(), kUnreached), branch_(g.num_nodes(), kNoNode),
      parent_(g.num_nodes(), kNoNode),
      local_(g.num_nodes(), 0) {}

// The cycle closed by edge (a, b) through the two tree paths to the root.
// Its node set is a degree-choosable component unless it induces a clique or
// a chordless odd cycle; its radius is at most the depth reached.
std::optional<std::vector<NodeId>> DccFinder::cycle_component(NodeId root, NodeId a, NodeId b) const {
  std::vector<NodeId> cycle;
  for (NodeId x = a; x != root; x = parent_[x]) {
    cycle.push_back(x);
  }
  for (NodeId x = b; x != root; x = parent_[x]) {
    cycle.push_back(x);
  }
  cycle.push_back(root);
  const Subgraph sub = induced_subgraph(*g_, cycle);
  if (classify_two_connected(sub.graph) != ComponentClass::kDcc) {
    return std::nullopt;
  }
  return sub.to_parent;
}

std::optional<std::vector<NodeId>> DccFinder::find(NodeId v, std::uint32_t r) {
  const Graph& g = *g_;
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  std::vector<NodeId> nodes{v};
  stamp_[v] = epoch_;
  local_[v] = 0;
  depth_[v] = 0;
  std::size_t induced_edges = 0;
  std::size_t last_checked_excess = 0;
  std::size_t level_begin = 0;
  bool through_root = false;
  std::vector<std::tuple<std::uint32_t, NodeId, NodeId>> closing;
  for (std::uint32_t k = 1; k <= r; ++k) {
    const std::size_t level_end = nodes.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (NodeId w : g.neighbors(nodes[i])) {
        if (stamp_[w] != epoch_) {
          stamp_[w] = epoch_;
          depth_[w] = k;
          branch_[w] = k == 1 ? w : branch_[nodes[i]];
          parent_[w] = nodes[i];
          local_[w] = static_cast<NodeId>(nodes.size());
          nodes.push_back(w);
        }
      }
    }
    if (nodes.size() == level_end) {
      break;  // ball stopped growing
    }
    // Edges with an endpoint on the new level and the other endpoint already
    // in the ball (same-level edges counted once).
    for (std::size_t i = level_end; i < nodes.size(); ++i) {
      const NodeId x = nodes[i];
      for (NodeId w : g.neighbors(x)) {
        if (stamp_[w] != epoch_) {
          continue;
        }
        if (depth_[w] + 1 == k || (depth_[w] == k && w < x)) {
          ++induced_edges;
          if (w != v && branch_[w] != branch_[x]) {
            through_root = true;
            closing.emplace_back(depth_[w] + k + 1, std::min(x, w), std::max(x, w));
          }
        }
      }
    }
    std::sort(closing.begin(), closing.end());
    for (const auto& [length, a, b] : closing) {
      if (auto cycle = cycle_component(v, a, b)) {
        return cycle;
      }
    }
    closing.clear();
    const std::size_t excess = induced_edges + 1 - nodes.size();  // cycle rank of the ball
    // Until two branches of the root meet, v lies on no cycle of the ball.
    if (!through_root || excess == last_checked_excess) {
      level_begin = level_end;
      continue;  // only tree-like growth since the last check
    }
    last_checked_excess = excess;
    if (auto found = search_blocks(r, nodes)) {
      return found;
    }
    level_begin = level_end;
  }
  return std::nullopt;
}

std::optional<std::vector<NodeId>> DccFinder::search_blocks(std::uint32_t r,
                                                            std::span<const NodeId> ball_nodes) {
  // Ball graph in BFS order, so v is local node 0. The ball's nodes carry the
  // current stamp and their BFS position in local_.
  Subgraph ball_graph;
  ball_graph.to_parent.assign(ball_nodes.begin(), ball_nodes.end());
  std::vector<Edge> edges;
  for (NodeId i = 0; i < ball_nodes.size(); ++i) {
    for (NodeId w : g_->neighbors(ball_nodes[i])) {
      if (stamp_[w] == epoch_ && local_[w] > i) {
        edges.emplace_back(i, local_[w]);
      }
    }
  }
  ball_graph.graph = Graph::from_edges(ball_nodes.size(), edges);
  const NodeId local_v = 0;
  const BlockDecomposition bd = block_decomposition(ball_graph.graph);
  for (const auto& block : bd.blocks) {
    if (block.size() < 4 || !std::binary_search(block.begin(), block.end(), local_v)) {
      continue;
    }
    const Subgraph block_graph = induced_subgraph(ball_graph.graph, block);
    if (classify_two_connected(block_graph.graph) != ComponentClass::kDcc) {
      continue;
    }
    const NodeId root = block_graph.to_local(local_v);
    auto to_parent = [&](std::span<const NodeId> local) {
      std::vector<NodeId> out;
      out.reserve(local.size());
      for (NodeId x : local) {
        out.push_back(ball_graph.to_parent[block_graph.to_parent[x]]);
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    if (auto cycle = even_cycle_through(block_graph.graph, root)) {
      if (graph_radius(induced_subgraph(block_graph.graph, *cycle).graph) <= r) {
        return to_parent(*cycle);
      }
    }
    const auto dist = bfs_distances(block_graph.graph, std::span<const NodeId>(&root, 1));
    const std::uint32_t ecc = *std::max_element(dist.begin(), dist.end());
    if (ecc <= r || (block.size() <= exact_radius_cap && graph_radius(block_graph.graph) <= r)) {
      std::vector<NodeId> out;
      for (NodeId x : block_graph.to_parent) {
        out.push_back(ball_graph.to_parent[x]);
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace deltacolor
