#pragma once

#include <filesystem>
#include <iosfwd>

#include "deltacolor/coloring.hpp"
#include "deltacolor/graph.hpp"

namespace deltacolor {

// Graph text format: a header line "n m" followed by m lines "u v" with
// u < v. Readers throw Error(kParse) on malformed input and Error(kIo) when
// the file cannot be opened.
Graph read_graph(std::istream& in);
Graph read_graph(const std::filesystem::path& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph(const std::filesystem::path& path, const Graph& g);

// Coloring text format: n lines "v c", 0-based nodes, 1-based colors
// (0 for uncolored).
Coloring read_coloring(std::istream& in, std::size_t n);
Coloring read_coloring(const std::filesystem::path& path, std::size_t n);
void write_coloring(std::ostream& out, const Coloring& coloring);
void write_coloring(const std::filesystem::path& path, const Coloring& coloring);

}  // namespace deltacolor
