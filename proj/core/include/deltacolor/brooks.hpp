#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "deltacolor/coloring.hpp"
#include "deltacolor/graph.hpp"

namespace deltacolor {

// ceil(2 ln n / ln(Delta - 1)); the radius inside which a completion may
// change colors. 0 for n <= 1.
std::uint32_t brooks_radius(std::size_t n, std::size_t delta);

struct BrooksOutcome {
  std::vector<NodeId> changed;     // nodes whose color changed, plus the start node; ascending
  std::uint32_t change_radius = 0; // largest distance from the start node to a changed node
  std::size_t token_moves = 0;
  std::size_t dcc_size = 0;        // size of the recolored component, 0 if none
  std::size_t rounds = 0;
};

struct BrooksResult {
  Coloring colors;
  BrooksOutcome outcome;
  std::uint32_t radius_bound = 0;
};

// Extends a proper Delta-coloring with exactly one uncolored node to all of
// g. Throws Error(kNotNice) unless g is connected and neither a path, a
// cycle nor a clique; Error(kBadPartial) when the partial coloring is not
// proper, uses colors outside 1..Delta or does not have exactly one hole.
BrooksResult complete_one_uncolored(const Graph& g, const Coloring& partial);

// Colors node v in place by the token walk, searching at most `radius`
// hops. Other uncolored nodes are allowed and never recolored unless they
// lie in the recolored component. Throws Error(kInternal) when the ball has
// neither a node with degree < Delta nor a degree-choosable component.
BrooksOutcome complete_at(const Graph& g, Coloring& colors, NodeId v, std::uint32_t radius);

// Colors g from the lists by backtracking with the fewest-options-first
// rule and forward checking. Nothing when no coloring exists.
std::optional<Coloring> solve_lists(const Graph& g, const ListAssignment& lists);

}  // namespace deltacolor
