#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace deltacolor {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
inline constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// Immutable simple undirected graph in compressed adjacency form. Neighbor
// lists are sorted ascending; node ids are 0..n-1.
class Graph {
 public:
  Graph() = default;

  // Throws Error(kInvalidGraph) on self-loops, duplicate edges or ids out of
  // range. Edge orientation does not matter.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_nodes() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return adjacency_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const noexcept { return max_degree_; }
  bool has_edge(NodeId u, NodeId v) const noexcept;

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  // Position of the first adjacency entry of v in the flat adjacency array;
  // the entry for neighbors(v)[i] is offset(v) + i.
  std::size_t offset(NodeId v) const noexcept { return offsets_[v]; }

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adjacency_;
  std::size_t max_degree_ = 0;
};

// An induced subgraph together with its id translation. Local ids follow the
// ascending order of the parent ids, so local order matches parent order.
struct Subgraph {
  Graph graph;
  std::vector<NodeId> to_parent;

  // Local id of a parent node, or kNoNode when it is not part of the subgraph.
  NodeId to_local(NodeId parent) const noexcept;
};

Subgraph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

// Breadth-first distances from the given sources, stopping after depth
// `limit`. Unreached nodes hold kUnreached.
std::vector<std::uint32_t> bfs_distances(const Graph& g, std::span<const NodeId> sources,
                                         std::uint32_t limit = kUnreached);

// Nodes within distance r of v, in BFS order (ties by ascending id).
std::vector<NodeId> ball(const Graph& g, NodeId v, std::uint32_t r);

// Per-node component index (0-based, numbered by smallest member) and the
// number of components.
std::pair<std::vector<std::uint32_t>, std::size_t> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// Length of the shortest cycle, or 0 when the graph is a forest. O(n*m).
std::size_t girth(const Graph& g);

// True when g contains a cycle of length < bound. Cheaper than girth() for
// small bounds on large graphs.
bool has_cycle_shorter_than(const Graph& g, std::size_t bound);

// Relabel nodes so that new id i is order[i].
Graph permute(const Graph& g, std::span<const NodeId> order);

}  // namespace deltacolor
