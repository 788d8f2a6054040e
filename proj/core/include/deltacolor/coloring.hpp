#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "deltacolor/graph.hpp"

namespace deltacolor {

using Color = std::uint32_t;
inline constexpr Color kUncolored = 0;

// Per-node color, kUncolored where undefined. Colors are 1-based.
using Coloring = std::vector<Color>;

// Per-node sorted list of admissible colors.
using ColorList = std::vector<Color>;
using ListAssignment = std::vector<ColorList>;

struct Verdict {
  enum class Kind { kOk, kUncolored, kOutOfPalette, kMonochromaticEdge, kNotInList, kSizeMismatch };

  Kind kind = Kind::kOk;
  std::optional<NodeId> node;
  std::optional<Edge> edge;
  std::string message;

  bool ok() const noexcept { return kind == Kind::kOk; }
};

const char* to_string(Verdict::Kind kind);

// Checks totality, palette {1..palette}, properness and, when given, list
// membership. Reports the first violation in node order.
Verdict verify(const Graph& g, const Coloring& coloring, Color palette,
               const ListAssignment* lists = nullptr);

// Properness of the colored part only; uncolored nodes are ignored.
bool is_proper_partial(const Graph& g, const Coloring& coloring);

std::size_t count_uncolored(const Coloring& coloring);

}  // namespace deltacolor
