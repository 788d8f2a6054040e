#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "deltacolor/coloring.hpp"
#include "deltacolor/graph.hpp"
#include "deltacolor/primitives.hpp"
#include "deltacolor/report.hpp"

namespace deltacolor {

enum class RandVariant { kLargeDelta, kSmallDelta };

const char* to_string(RandVariant v);

struct MarkingParams {
  double p = 0.0;
  std::uint32_t b = 6;
  std::uint32_t r = 2;
};

// Knobs; anything left empty takes the variant's default.
struct RandConfig {
  std::optional<std::uint32_t> r;
  std::optional<std::uint32_t> b;
  std::optional<double> p;
  std::optional<std::uint64_t> component_cap;
  double small_delta_c = 6.0;
  std::size_t small_delta_cap = 6;
};

struct RandParams {
  MarkingParams marking;
  std::uint32_t beta = 0;          // 6r
  std::uint32_t s = 0;             // beta * (r + 1)
  std::uint64_t component_cap = 0;  // N
  std::uint32_t r_small = 0;       // radius bound for DCCs inside leftover components
};

// Smallest even r with (Delta-2)^(r/2) * Delta^-12 / 12 >= (4r + 32) ln Delta.
std::uint32_t large_delta_r(std::size_t delta);
// ceil(c * log2 log2 n) rounded up to a multiple of 6, at least 6.
std::uint32_t small_delta_r(std::size_t n, double c = 6.0);
// ceil(Delta^(2b) * log2 n), saturating.
std::uint64_t default_component_cap(std::size_t n, std::size_t delta, std::uint32_t b);
// 2 log_{Delta-2} N + 1 rounded up; for Delta = 3 the logarithm degenerates
// and the result is `fallback`.
std::uint32_t small_component_radius(std::uint64_t cap, std::size_t delta, std::uint32_t fallback);

// Throws Error(kParamUnsupported) when the variant does not cover Delta.
RandParams rand_params(std::size_t n, std::size_t delta, RandVariant variant, const RandConfig& config = {});

struct PhaseOne {
  LayerDecomposition layers;                  // B_0..B_s
  std::vector<char> in_h;                     // per node: not layered
  std::vector<std::vector<NodeId>> base_dccs;  // members of the ruling set, each ascending
  std::size_t selecting = 0;                  // nodes that found a DCC within radius r
  std::size_t rounds = 0;
  bool extended = false;                      // layers went past s to cover a selecting node
};

PhaseOne remove_small_dccs(const Graph& g, const RandParams& params);

enum class MarkStatus : std::uint8_t { kPlain, kTNode, kMarked };

struct MarkingOutcome {
  std::vector<NodeId> tnodes;    // ascending
  std::vector<NodeId> marked;    // ascending
  std::vector<MarkStatus> status;
  std::size_t selected = 0;      // before backing off
  std::size_t rounds = 0;
};

// Runs on the nodes with in_h set (all nodes when in_h is empty); distances
// are measured inside that set.
MarkingOutcome marking_process(const Graph& g, const MarkingParams& params, std::uint64_t seed,
                               const std::vector<char>& in_h = {}, std::span<const std::uint64_t> ids = {});

struct HappyLayers {
  LayerDecomposition layers;        // C_0..C_k
  std::vector<NodeId> leftover;     // L, ascending
  std::vector<NodeId> kept_marks;   // marked nodes still colored one, ascending
  std::vector<NodeId> boundary;     // nodes of H with degree < Delta in H
  std::size_t happy = 0;            // nodes of H with an uncolored path to a T-node within r
  std::size_t rounds = 0;
};

// delta = 0 means g.max_degree().
HappyLayers build_happy_layers(const Graph& g, const MarkingOutcome& outcome, const MarkingParams& params,
                               const std::vector<char>& in_h = {}, std::size_t delta = 0);

struct SmallComponentStats {
  std::size_t components = 0;
  std::size_t max_component = 0;
  std::size_t max_layers = 0;    // deepest D-layering
  std::size_t unresolved = 0;    // nodes left for the final repair
  std::size_t rounds = 0;        // maximum over components, which run in parallel
};

// Colors the leftover nodes in place. `colors` carries everything colored
// so far. Throws Error(kComponentTooLarge) when a component exceeds the cap.
SmallComponentStats color_small_components(const Graph& g, std::span<const NodeId> leftover, Coloring& colors,
                                           const RandParams& params, std::uint64_t seed,
                                           std::span<const std::uint64_t> ids = {});

struct ShatteringStats {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t delta = 0;
  RandVariant variant = RandVariant::kLargeDelta;
  std::uint32_t r = 0;
  std::uint32_t b = 0;
  std::size_t h_size = 0;
  std::size_t leftover = 0;
  double unhappy_fraction = 0.0;  // |L| / |H|
  std::size_t max_component = 0;
  std::map<std::size_t, std::size_t> component_histogram;  // size -> count
};

std::string to_json(const ShatteringStats& stats);

struct RandResult {
  Coloring colors;
  RunReport report;
  RandParams params;
  ShatteringStats stats;
  std::size_t tnodes = 0;
  std::size_t c0_without_free_color = 0;
  std::size_t repairs = 0;  // nodes colored by the completion fallback
  bool phase_one_extended = false;
};

// Throws Error(kNotNice), Error(kParamUnsupported) or Error(kComponentTooLarge).
RandResult run_randomized(const Graph& g, RandVariant variant, std::uint64_t seed, const RandConfig& config = {});

// Marking and happy layers on h alone, once per seed.
std::vector<ShatteringStats> shattering_stats(const Graph& h, const MarkingParams& params,
                                              std::span<const std::uint64_t> seeds,
                                              RandVariant variant = RandVariant::kLargeDelta, std::size_t delta = 0);

}  // namespace deltacolor
