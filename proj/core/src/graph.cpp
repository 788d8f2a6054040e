#include "deltacolor/graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "deltacolor/errors.hpp"

namespace deltacolor {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n >= kNoNode) {
    throw Error(ErrorCode::kInvalidGraph, "too many nodes");
  }
  Graph g;
  std::vector<std::size_t> degree(n, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::kInvalidGraph,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u == v) {
      throw Error(ErrorCode::kInvalidGraph, "self-loop at " + std::to_string(u));
    }
    ++degree[u];
    ++degree[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  }
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.adjacency_[fill[u]++] = v;
    g.adjacency_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw Error(ErrorCode::kInvalidGraph,
                  "duplicate edge (" + std::to_string(v) + "," + std::to_string(*dup) + ")");
    }
    g.max_degree_ = std::max(g.max_degree_, degree[v]);
  }
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
  if (u >= num_nodes() || v >= num_nodes()) {
    return false;
  }
  if (degree(u) > degree(v)) {
    std::swap(u, v);
  }
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (NodeId u = 0; u < num_nodes(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

NodeId Subgraph::to_local(NodeId parent) const noexcept {
  auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent);
  if (it == to_parent.end() || *it != parent) {
    return kNoNode;
  }
  return static_cast<NodeId>(it - to_parent.begin());
}

Subgraph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  Subgraph sub;
  sub.to_parent.assign(nodes.begin(), nodes.end());
  std::sort(sub.to_parent.begin(), sub.to_parent.end());
  sub.to_parent.erase(std::unique(sub.to_parent.begin(), sub.to_parent.end()), sub.to_parent.end());
  std::vector<Edge> edges;
  for (NodeId local = 0; local < sub.to_parent.size(); ++local) {
    for (NodeId w : g.neighbors(sub.to_parent[local])) {
      const NodeId other = sub.to_local(w);
      if (other != kNoNode && local < other) {
        edges.emplace_back(local, other);
      }
    }
  }
  sub.graph = Graph::from_edges(sub.to_parent.size(), edges);
  return sub;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, std::span<const NodeId> sources,
                                         std::uint32_t limit) {
  std::vector<std::uint32_t> dist(g.num_nodes(), kUnreached);
  std::vector<NodeId> queue;
  queue.reserve(g.num_nodes());
  for (NodeId s : sources) {
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    if (dist[u] >= limit) {
      continue;
    }
    for (NodeId w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<NodeId> ball(const Graph& g, NodeId v, std::uint32_t r) {
  std::vector<NodeId> order{v};
  std::vector<std::uint32_t> depth{0};
  std::unordered_set<NodeId> seen{v};
  for (std::size_t head = 0; head < order.size(); ++head) {
    if (depth[head] >= r) {
      continue;
    }
    for (NodeId w : g.neighbors(order[head])) {
      if (seen.insert(w).second) {
        order.push_back(w);
        depth.push_back(depth[head] + 1);
      }
    }
  }
  return order;
}

std::pair<std::vector<std::uint32_t>, std::size_t> connected_components(const Graph& g) {
  std::vector<std::uint32_t> comp(g.num_nodes(), kUnreached);
  std::size_t count = 0;
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < g.num_nodes(); ++s) {
    if (comp[s] != kUnreached) {
      continue;
    }
    comp[s] = static_cast<std::uint32_t>(count);
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (NodeId w : g.neighbors(u)) {
        if (comp[w] == kUnreached) {
          comp[w] = static_cast<std::uint32_t>(count);
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return {std::move(comp), count};
}

bool is_connected(const Graph& g) { return connected_components(g).second <= 1; }

namespace {

// Shortest closed walk through a non-tree edge found by a BFS from root,
// exploring up to `depth`. Returns kUnreached when none is found.
std::size_t shortest_cycle_from(const Graph& g, NodeId root, std::uint32_t depth,
                                std::vector<std::uint32_t>& dist, std::vector<NodeId>& parent,
                                std::vector<NodeId>& touched) {
  std::size_t best = kUnreached;
  touched.clear();
  dist[root] = 0;
  parent[root] = kNoNode;
  touched.push_back(root);
  for (std::size_t head = 0; head < touched.size(); ++head) {
    const NodeId u = touched[head];
    if (2 * dist[u] + 1 >= best) {
      break;
    }
    for (NodeId w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        if (dist[u] < depth) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          touched.push_back(w);
        }
      } else if (parent[u] != w) {
        best = std::min<std::size_t>(best, dist[u] + dist[w] + 1);
      }
    }
  }
  for (NodeId t : touched) {
    dist[t] = kUnreached;
  }
  return best;
}

}  // namespace

std::size_t girth(const Graph& g) {
  std::vector<std::uint32_t> dist(g.num_nodes(), kUnreached);
  std::vector<NodeId> parent(g.num_nodes(), kNoNode);
  std::vector<NodeId> touched;
  std::size_t best = kUnreached;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    best = std::min(best, shortest_cycle_from(g, v, kUnreached, dist, parent, touched));
  }
  return best == kUnreached ? 0 : best;
}

bool has_cycle_shorter_than(const Graph& g, std::size_t bound) {
  if (bound <= 3) {
    return false;
  }
  std::vector<std::uint32_t> dist(g.num_nodes(), kUnreached);
  std::vector<NodeId> parent(g.num_nodes(), kNoNode);
  std::vector<NodeId> touched;
  const auto depth = static_cast<std::uint32_t>(bound / 2);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (shortest_cycle_from(g, v, depth, dist, parent, touched) < bound) {
      return true;
    }
  }
  return false;
}

Graph permute(const Graph& g, std::span<const NodeId> order) {
  std::vector<NodeId> new_id(g.num_nodes(), kNoNode);
  for (NodeId i = 0; i < order.size(); ++i) {
    new_id[order[i]] = i;
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const auto& [u, v] : g.edges()) {
    edges.emplace_back(std::min(new_id[u], new_id[v]), std::max(new_id[u], new_id[v]));
  }
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(g.num_nodes(), edges);
}

}  // namespace deltacolor
