#pragma once

#include <cstddef>
#include <optional>

#include "deltacolor/coloring.hpp"
#include "deltacolor/graph.hpp"

namespace deltacolor::oracle {

inline constexpr std::size_t kDefaultColoringCap = 24;
inline constexpr std::size_t kChoosabilityCap = 6;

// Lexicographically first proper k-coloring under backtracking in ascending
// node id and ascending color. Throws Error(kTooLarge) above `max_nodes`.
std::optional<Coloring> delta_coloring(const Graph& g, Color k, std::size_t max_nodes = kDefaultColoringCap);

// First proper coloring from the given lists under the same search order.
std::optional<Coloring> list_coloring(const Graph& g, const ListAssignment& lists);

// Exhaustive degree-choosability check: every assignment of lists with
// |L(v)| = deg(v) drawn from {1..universe} is tried (one representative per
// color relabeling). Requires n <= 6 and universe <= 6.
bool degree_choosable(const Graph& g, Color universe = 6);

}  // namespace deltacolor::oracle
