#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "deltacolor/coloring.hpp"
#include "deltacolor/graph.hpp"

namespace deltacolor {

// Every primitive accepts an optional per-node identifier table `ids`
// (defaults to the node indices). Identifiers seed the symmetry breaking
// and key the randomness, so running on an induced subgraph with the
// parent's ids reproduces the parent's behavior on those nodes.

struct LinialResult {
  Coloring colors;
  Color palette = 0;  // colors lie in 1..palette
  std::size_t rounds = 0;
};

// Iterated polynomial color reduction starting from the identifiers, then
// one round per color class above 5*Delta^2.
LinialResult linial_coloring(const Graph& g, std::span<const std::uint64_t> ids = {});

// One reduction step: palette size m to palette q*q using polynomials of
// degree d over GF(q). Exposed for tests.
struct LinialStep {
  std::uint64_t q = 0;
  std::uint32_t d = 0;
};
std::vector<LinialStep> linial_schedule(std::uint64_t initial_palette, std::size_t max_degree);

enum class RulingMethod { kDet2Beta, kDetK, kRandLogLog };

struct RulingSetParams {
  std::uint32_t alpha = 2;
  RulingMethod method = RulingMethod::kDet2Beta;
};

struct RulingSetResult {
  std::vector<NodeId> members;  // ascending
  std::uint32_t beta = 0;       // measured covering radius
  std::size_t rounds = 0;
};

// (alpha, beta) ruling set. det-2beta: Linial coloring of G^(alpha-1), then
// greedy by color class; alpha in {2, 3}. det-k: recursive splitting on the
// identifier bits, run on G^(alpha-1); beta <= (alpha-1) * bits. rand-loglog:
// random-priority independent set of G^(alpha-1).
// Throws Error(kParamUnsupported) for other combinations.
RulingSetResult ruling_set(const Graph& g, const RulingSetParams& params, std::uint64_t seed,
                           std::span<const std::uint64_t> ids = {});

// Ruling set over a family of node groups. Two groups conflict when some of
// their members are within distance rho in g. Returns indices of a
// conflict-free subfamily such that every group is within `levels` conflict
// hops of a chosen one (one hop per identifier bit). Groups are ordered by
// their position; rounds are charged rho per bit.
struct GroupRulingResult {
  std::vector<std::uint32_t> chosen;  // ascending
  std::size_t rounds = 0;
  std::size_t levels = 0;
};
GroupRulingResult group_ruling_set(const Graph& g, std::span<const std::vector<NodeId>> groups,
                                   std::uint32_t rho);

enum class ListMode { kDeterministic, kRandomized };

struct ListColorResult {
  Coloring colors;
  std::size_t rounds = 0;
};

// (deg+1)-list coloring. Deterministic mode sweeps the classes of
// `base_coloring` (which must be proper on g) in ascending order, each node
// taking its smallest free list color; randomized mode lets every uncolored
// node propose a random list color and keep it when no neighbor competes.
// Throws Error(kListTooSmall) naming the first node with |L(v)| <= deg(v).
ListColorResult list_color(const Graph& g, const ListAssignment& lists, const Coloring& base_coloring,
                           ListMode mode, std::uint64_t seed, std::span<const std::uint64_t> ids = {},
                           std::size_t max_rounds = 100000);

struct LayerDecomposition {
  std::vector<std::vector<NodeId>> layers;  // layers[i] ascending

  std::size_t covered() const;
  std::size_t depth() const { return layers.empty() ? 0 : layers.size() - 1; }
};

// Layers by distance from `base`, inside the node set given by `inside`
// (all nodes when empty), up to `max_layer` (unbounded when kUnreached).
LayerDecomposition distance_layers(const Graph& g, std::span<const NodeId> base,
                                   std::uint32_t max_layer = kUnreached,
                                   const std::vector<char>& inside = {});

struct LayeredConfig {
  ListMode mode = ListMode::kDeterministic;
  const Coloring* base_coloring = nullptr;  // proper on g; computed per layer when null
  std::uint64_t seed = 0;
  std::span<const std::uint64_t> ids;
};

struct LayeredResult {
  Coloring colors;  // fixed plus layers 1..s
  std::size_t rounds = 0;
};

// Colors layers s..1 in reverse. A node's list is {1..palette} minus the
// colors of its already colored neighbors; nodes colored in `fixed` are
// never touched and layer 0 is left to the caller. Throws
// Error(kLayerListViolation) when a list is shorter than deg in the layer + 1.
LayeredResult layered_color(const Graph& g, const LayerDecomposition& decomposition, Color palette,
                            const Coloring& fixed, const LayeredConfig& config = {});

// Colors `nodes` as one (deg+1)-list instance inside `colors`: each node's
// list is {1..palette} minus its colored neighbors' colors. Returns the
// rounds used. Throws Error(kLayerListViolation) naming `layer_index` when
// a list is shorter than the node's degree among `nodes` plus one.
std::size_t color_layer(const Graph& g, std::span<const NodeId> nodes, Color palette, Coloring& colors,
                        const LayeredConfig& config, std::size_t layer_index = 0);

struct NetworkDecomposition {
  std::vector<std::uint32_t> cluster;  // per node
  std::vector<std::uint32_t> color;    // per node, 0-based
  std::vector<NodeId> centers;         // per cluster
  std::size_t num_colors = 0;
  std::uint32_t diameter_bound = 0;    // weak diameter guarantee in g
  std::size_t rounds = 0;
};

// Ball carving in color phases. Clusters have weak diameter at most
// `target_diameter`; clusters of one color are more than `separation` apart.
// Colors keep being added until every node is clustered, so `target_colors`
// is a budget that the result may exceed; the achieved count is reported.
NetworkDecomposition network_decomposition(const Graph& g, std::uint32_t target_diameter,
                                           std::size_t target_colors, std::uint64_t seed,
                                           std::uint32_t separation = 1,
                                           std::span<const std::uint64_t> ids = {});

// Largest distance in g between two nodes of one cluster. O(n * m).
std::uint32_t weak_diameter(const Graph& g, const NetworkDecomposition& nd);

// Largest distance from any node to the nearest member. kUnreached when
// some node is not covered.
std::uint32_t covering_radius(const Graph& g, std::span<const NodeId> members);

// Smallest pairwise distance between members, capped at `cap`.
std::uint32_t min_pairwise_distance(const Graph& g, std::span<const NodeId> members, std::uint32_t cap);

// Graph on the same nodes with an edge between nodes at distance 1..k.
Graph power_graph(const Graph& g, std::uint32_t k);

}  // namespace deltacolor
