#include "deltacolor/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "deltacolor/errors.hpp"

namespace deltacolor {
namespace {

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open " + path.string());
  }
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  }
  return out;
}

// Reads one line holding exactly two unsigned integers.
bool read_pair(std::istream& in, std::uint64_t& a, std::uint64_t& b, std::size_t line_no) {
  std::string line;
  if (!std::getline(in, line)) {
    return false;
  }
  std::istringstream fields(line);
  std::string extra;
  if (!(fields >> a >> b) || (fields >> extra)) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected two integers");
  }
  return true;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  if (!read_pair(in, n, m, 1)) {
    throw Error(ErrorCode::kParse, "missing header line");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (!read_pair(in, u, v, i + 2)) {
      throw Error(ErrorCode::kParse, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    if (u >= v || v >= n) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(i + 2) + ": need 0 <= u < v < n");
    }
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  try {
    return Graph::from_edges(n, edges);
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

Graph read_graph(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_nodes() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) {
    out << u << ' ' << v << '\n';
  }
}

void write_graph(const std::filesystem::path& path, const Graph& g) {
  auto out = open_out(path);
  write_graph(out, g);
  if (!out) {
    throw Error(ErrorCode::kIo, "write failed for " + path.string());
  }
}

Coloring read_coloring(std::istream& in, std::size_t n) {
  Coloring coloring(n, kUncolored);
  std::vector<char> seen(n, 0);
  std::uint64_t v = 0;
  std::uint64_t c = 0;
  for (std::size_t line = 1; read_pair(in, v, c, line); ++line) {
    if (v >= n || seen[v]) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": bad or repeated node " + std::to_string(v));
    }
    seen[v] = 1;
    coloring[v] = static_cast<Color>(c);
  }
  return coloring;
}

Coloring read_coloring(const std::filesystem::path& path, std::size_t n) {
  auto in = open_in(path);
  return read_coloring(in, n);
}

void write_coloring(std::ostream& out, const Coloring& coloring) {
  for (std::size_t v = 0; v < coloring.size(); ++v) {
    out << v << ' ' << coloring[v] << '\n';
  }
}

void write_coloring(const std::filesystem::path& path, const Coloring& coloring) {
  auto out = open_out(path);
  write_coloring(out, coloring);
  if (!out) {
    throw Error(ErrorCode::kIo, "write failed for " + path.string());
  }
}

}  // namespace deltacolor
