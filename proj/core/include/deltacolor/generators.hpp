#pragma once

#include <cstdint>
#include <string>

#include "deltacolor/graph.hpp"

namespace deltacolor::gen {

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
// K_n with the edge {0, 1} removed.
Graph clique_minus_edge(std::size_t n);
Graph petersen();
// Two triangles joined by a perfect matching.
Graph prism();
// w x h grid with wraparound; 4-regular for w, h >= 3.
Graph torus(std::size_t w, std::size_t h);

// Uniform-ish d-regular simple connected graph by the pairing model with
// rejection of loops and multi-edges. Throws Error(kInfeasibleFamily) when
// n*d is odd or d >= n, Error(kRejectionBudgetExceeded) after `budget`
// failed attempts.
Graph regular(std::size_t n, std::size_t d, std::uint64_t seed, std::size_t budget = 200);

// d-regular connected graph without cycles shorter than g_min, obtained
// from regular() by edge switches that break short cycles.
Graph high_girth(std::size_t n, std::size_t d, std::size_t g_min, std::uint64_t seed, std::size_t budget = 200);

// Tree of blocks. `spec` is a comma-separated list of K<k> (clique) and
// C<l> (odd cycle) tokens; each block after the first is glued at a
// seed-chosen existing node. Every block of the result is a clique or an
// odd cycle.
Graph gallai(const std::string& spec, std::uint64_t seed);

// regular(n, d) with `remove` random edges deleted while keeping the
// graph connected; gives non-regular nice graphs with the same Delta.
Graph perturbed_regular(std::size_t n, std::size_t d, std::size_t remove, std::uint64_t seed);

// Parses family strings such as "regular:1000:3", "torus:4:4",
// "high_girth:1000:3:8", "gallai:K4,C5,K3", "cycle:5", "petersen".
Graph from_family(const std::string& family, std::uint64_t seed);

}  // namespace deltacolor::gen
