#include "deltacolor/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "deltacolor/errors.hpp"

namespace deltacolor::oracle {
namespace {

bool extend(const Graph& g, const ListAssignment& lists, Coloring& c, NodeId v) {
  if (v == g.num_nodes()) {
    return true;
  }
  for (Color color : lists[v]) {
    bool clash = false;
    for (NodeId w : g.neighbors(v)) {
      if (w < v && c[w] == color) {
        clash = true;
        break;
      }
    }
    if (clash) {
      continue;
    }
    c[v] = color;
    if (extend(g, lists, c, v + 1)) {
      return true;
    }
  }
  c[v] = kUncolored;
  return false;
}

// Assign lists to nodes 0..n-1 in order. Colors already used are 1..used;
// any fresh colors a node takes are the next unused labels, which picks one
// representative per relabeling of the universe.
bool all_assignments_colorable(const Graph& g, Color universe, ListAssignment& lists, NodeId v,
                               Color used, Coloring& scratch) {
  if (v == g.num_nodes()) {
    std::fill(scratch.begin(), scratch.end(), kUncolored);
    return extend(g, lists, scratch, 0);
  }
  const auto need = static_cast<Color>(g.degree(v));
  // Choose `old` colors out of 1..used by bitmask, then fresh ones.
  for (std::uint32_t mask = 0; mask < (1u << used); ++mask) {
    const auto old = static_cast<Color>(std::popcount(mask));
    if (old > need || used + (need - old) > universe) {
      continue;
    }
    ColorList list;
    for (Color c = 1; c <= used; ++c) {
      if (mask & (1u << (c - 1))) {
        list.push_back(c);
      }
    }
    for (Color c = used + 1; c <= used + (need - old); ++c) {
      list.push_back(c);
    }
    lists[v] = std::move(list);
    if (!all_assignments_colorable(g, universe, lists, v + 1, used + (need - old), scratch)) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::optional<Coloring> delta_coloring(const Graph& g, Color k, std::size_t max_nodes) {
  if (g.num_nodes() > max_nodes) {
    throw Error(ErrorCode::kTooLarge, "oracle coloring limited to " + std::to_string(max_nodes) + " nodes");
  }
  ListAssignment lists(g.num_nodes());
  for (auto& list : lists) {
    for (Color c = 1; c <= k; ++c) {
      list.push_back(c);
    }
  }
  return list_coloring(g, lists);
}

std::optional<Coloring> list_coloring(const Graph& g, const ListAssignment& lists) {
  Coloring c(g.num_nodes(), kUncolored);
  if (extend(g, lists, c, 0)) {
    return c;
  }
  return std::nullopt;
}

bool degree_choosable(const Graph& g, Color universe) {
  if (g.num_nodes() > kChoosabilityCap || universe > 6) {
    throw Error(ErrorCode::kTooLarge, "degree-choosability oracle limited to n <= 6, U <= 6");
  }
  ListAssignment lists(g.num_nodes());
  Coloring scratch(g.num_nodes(), kUncolored);
  return all_assignments_colorable(g, universe, lists, 0, 0, scratch);
}

}  // namespace deltacolor::oracle
