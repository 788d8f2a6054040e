#include "deltacolor/coloring.hpp"

#include <algorithm>
#include <string>

namespace deltacolor {

const char* to_string(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::kOk: return "ok";
    case Verdict::Kind::kUncolored: return "uncolored";
    case Verdict::Kind::kOutOfPalette: return "out_of_palette";
    case Verdict::Kind::kMonochromaticEdge: return "monochromatic_edge";
    case Verdict::Kind::kNotInList: return "not_in_list";
    case Verdict::Kind::kSizeMismatch: return "size_mismatch";
  }
  return "?";
}

Verdict verify(const Graph& g, const Coloring& coloring, Color palette, const ListAssignment* lists) {
  Verdict v;
  if (coloring.size() != g.num_nodes() || (lists != nullptr && lists->size() != g.num_nodes())) {
    v.kind = Verdict::Kind::kSizeMismatch;
    v.message = "coloring has " + std::to_string(coloring.size()) + " entries for " +
                std::to_string(g.num_nodes()) + " nodes";
    return v;
  }
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    const Color c = coloring[u];
    if (c == kUncolored) {
      v.kind = Verdict::Kind::kUncolored;
      v.node = u;
      v.message = "node " + std::to_string(u) + " is uncolored";
      return v;
    }
    if (c > palette) {
      v.kind = Verdict::Kind::kOutOfPalette;
      v.node = u;
      v.message = "node " + std::to_string(u) + " has color " + std::to_string(c) + " outside 1.." +
                  std::to_string(palette);
      return v;
    }
    if (lists != nullptr) {
      const auto& list = (*lists)[u];
      if (!std::binary_search(list.begin(), list.end(), c)) {
        v.kind = Verdict::Kind::kNotInList;
        v.node = u;
        v.message = "node " + std::to_string(u) + " has color " + std::to_string(c) + " not in its list";
        return v;
      }
    }
    for (NodeId w : g.neighbors(u)) {
      if (u < w && coloring[w] == c) {
        v.kind = Verdict::Kind::kMonochromaticEdge;
        v.edge = Edge{u, w};
        v.message = "edge (" + std::to_string(u) + "," + std::to_string(w) + ") has both ends colored " +
                    std::to_string(c);
        return v;
      }
    }
  }
  return v;
}

bool is_proper_partial(const Graph& g, const Coloring& coloring) {
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    if (coloring[u] == kUncolored) {
      continue;
    }
    for (NodeId w : g.neighbors(u)) {
      if (coloring[w] == coloring[u]) {
        return false;
      }
    }
  }
  return true;
}

std::size_t count_uncolored(const Coloring& coloring) {
  return static_cast<std::size_t>(std::count(coloring.begin(), coloring.end(), kUncolored));
}

}  // namespace deltacolor
