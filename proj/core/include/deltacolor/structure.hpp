#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "deltacolor/graph.hpp"

namespace deltacolor {

// Breadth-first structure around a root, truncated at a depth. The parent of
// a node is its smallest-id neighbor one level up, which makes the structure
// canonical; when the ball has no short degree-choosable component every
// node has exactly one such neighbor anyway.
struct BfsStructure {
  NodeId root = 0;
  std::vector<std::vector<NodeId>> levels;  // levels[t] = B_t(root), ascending ids
  std::vector<NodeId> parent;               // kNoNode for the root and unreached nodes
  std::vector<std::uint32_t> child_count;   // d(u): children in the BFS tree
  std::vector<std::uint32_t> depth;         // kUnreached outside the ball

  // Number of neighbors of u on the level directly above u.
  std::size_t up_degree(const Graph& g, NodeId u) const;

  // Tree path from u up to the root, u first.
  std::vector<NodeId> path_to_root(NodeId u) const;
};

BfsStructure bfs_layers(const Graph& g, NodeId root, std::uint32_t depth);

// Maximal 2-connected pieces. Bridges appear as two-node blocks; isolated
// nodes belong to no block.
struct BlockDecomposition {
  std::vector<std::vector<NodeId>> blocks;  // each ascending; ordered by smallest member
  std::vector<NodeId> cut_vertices;         // ascending
};

BlockDecomposition block_decomposition(const Graph& g);

enum class ComponentClass { kClique, kOddCycle, kDcc, kBridgeEdge };

const char* to_string(ComponentClass c);

// Classifies a 2-connected node set (or a single edge). Throws
// Error(kNotABlock) when the set is not 2-connected in g.
ComponentClass classify_block(const Graph& g, std::span<const NodeId> block);

// Same classification for a graph already known to be 2-connected (or K2).
ComponentClass classify_two_connected(const Graph& block_graph);

// True when every block of g is a clique, an odd cycle or a bridge.
bool is_gallai_forest(const Graph& g);

// Exact certificate that the induced r-ball around v contains no
// degree-choosable component of any radius: its blocks are all cliques, odd
// cycles or bridges.
bool ball_is_dcc_free(const Graph& g, NodeId v, std::uint32_t r);

// Connected, and neither a path, a cycle nor a complete graph.
bool is_nice(const Graph& g);

// min over nodes of the eccentricity, measured inside g.
std::uint32_t graph_radius(const Graph& g);

// Searches the r-ball of v for a degree-choosable component that contains v
// and has radius <= r inside its induced subgraph. Returns its nodes
// (ascending) or nothing. Deterministic.
std::optional<std::vector<NodeId>> find_dcc_within_radius(const Graph& g, NodeId v, std::uint32_t r);

// Reusable form of find_dcc_within_radius for repeated queries on one graph;
// keeps O(n) scratch so each query costs time proportional to the ball.
class DccFinder {
 public:
  explicit DccFinder(const Graph& g);

  std::optional<std::vector<NodeId>> find(NodeId v, std::uint32_t r);

  // Tuning knob: blocks larger than this are only accepted when the root's
  // own eccentricity already certifies the radius bound.
  std::size_t exact_radius_cap = 4096;

 private:
  std::optional<std::vector<NodeId>> search_blocks(std::uint32_t r,
                                                   std::span<const NodeId> ball_nodes);
  std::optional<std::vector<NodeId>> cycle_component(NodeId root, NodeId a, NodeId b) const;

  const Graph* g_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> depth_;
  std::vector<NodeId> branch_;
  std::vector<NodeId> parent_;
  std::vector<NodeId> local_;
  std::uint32_t epoch_ = 0;
};

// A smallest-length even cycle through `root` in a 2-connected graph whose
// two tree paths meet only at the root, found via one BFS. The node set is
// returned ascending; nothing when no such cycle induces a non-clique.
std::optional<std::vector<NodeId>> even_cycle_through(const Graph& g, NodeId root);

}  // namespace deltacolor
