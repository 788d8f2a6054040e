#pragma once

#include <cstdint>

#include "deltacolor/coloring.hpp"
#include "deltacolor/graph.hpp"
#include "deltacolor/report.hpp"

namespace deltacolor {

struct DetParams {
  std::uint32_t R = 3;  // ceil(4 log_{Delta-1} n) + 1, at least 3
  std::uint32_t z = 0;  // analytic layer bound: 4R^2 (ruling forest) or R+1 (network decomposition)
};

DetParams det_params(std::size_t n, std::size_t delta, bool netcomp = false);

struct DetResult {
  Coloring colors;
  RunReport report;
  DetParams params;
  std::uint32_t layers = 0;       // measured z'
  std::size_t base_nodes = 0;     // |B_0|
  std::size_t nd_colors = 0;      // network decomposition colors (netcomp only)
};

// Ruling set B_0 at pairwise distance >= R, distance layers B_1..B_z',
// reverse-order list coloring of the layers, then an independent Brooks
// completion at every B_0 node. Throws Error(kNotNice).
DetResult color_det_rulingforest(const Graph& g, std::uint64_t seed = 0);

// Same pipeline with the ruling set and the layer coloring scheduled by
// network decompositions. Throws Error(kNotNice).
DetResult color_det_netcomp(const Graph& g, std::uint64_t seed = 0);

}  // namespace deltacolor
