#include "deltacolor/generators.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "deltacolor/errors.hpp"
#include "deltacolor/random.hpp"

namespace deltacolor::gen {
namespace {

Graph build(std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) {
    parts.push_back(part);
  }
  return parts;
}

std::size_t to_size(const std::string& text) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParse, "not a number: '" + text + "'");
  }
  return value;
}

// One pairing-model attempt; empty when it got stuck on loops/multi-edges.
std::optional<std::vector<Edge>> pair_stubs(std::size_t n, std::size_t d, Rng& rng) {
  std::vector<NodeId> stubs;
  stubs.reserve(n * d);
  for (NodeId v = 0; v < n; ++v) {
    stubs.insert(stubs.end(), d, v);
  }
  std::set<Edge> edges;
  while (!stubs.empty()) {
    bool placed = false;
    for (int attempt = 0; attempt < 100 && !placed; ++attempt) {
      const std::size_t i = rng.uniform(stubs.size());
      const std::size_t j = rng.uniform(stubs.size());
      NodeId a = stubs[i];
      NodeId b = stubs[j];
      if (i == j || a == b) {
        continue;
      }
      if (a > b) {
        std::swap(a, b);
      }
      if (!edges.insert({a, b}).second) {
        continue;
      }
      // remove the larger index first so the smaller stays valid
      for (std::size_t k : {std::max(i, j), std::min(i, j)}) {
        stubs[k] = stubs.back();
        stubs.pop_back();
      }
      placed = true;
    }
    if (!placed) {
      return std::nullopt;
    }
  }
  return std::vector<Edge>(edges.begin(), edges.end());
}

// Length of the shortest cycle through edge (u, v) if shorter than bound.
bool edge_on_short_cycle(const std::vector<std::vector<NodeId>>& adj, NodeId u, NodeId v, std::size_t bound,
                         std::vector<std::uint32_t>& dist, std::vector<NodeId>& touched) {
  // distance from u to v avoiding the edge must be < bound - 1
  const std::uint32_t limit = static_cast<std::uint32_t>(bound - 2);
  std::vector<NodeId> queue{u};
  dist[u] = 0;
  touched.assign(1, u);
  bool found = false;
  for (std::size_t head = 0; head < queue.size() && !found; ++head) {
    const NodeId x = queue[head];
    if (dist[x] >= limit) {
      continue;
    }
    for (NodeId y : adj[x]) {
      if (x == u && y == v) {
        continue;
      }
      if (dist[y] == kUnreached) {
        dist[y] = dist[x] + 1;
        touched.push_back(y);
        queue.push_back(y);
        if (y == v) {
          found = true;
          break;
        }
      }
    }
  }
  for (NodeId x : touched) {
    dist[x] = kUnreached;
  }
  return found;
}

bool adjacent(const std::vector<std::vector<NodeId>>& adj, NodeId a, NodeId b) {
  return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
}

void replace_neighbor(std::vector<NodeId>& list, NodeId from, NodeId to) {
  *std::find(list.begin(), list.end(), from) = to;
}

}  // namespace

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId v = 1; v < n; ++v) {
    edges.emplace_back(v - 1, v);
  }
  return build(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) {
    throw Error(ErrorCode::kInfeasibleFamily, "a cycle needs at least 3 nodes");
  }
  std::vector<Edge> edges;
  for (NodeId v = 0; v < n; ++v) {
    edges.emplace_back(v, static_cast<NodeId>((v + 1) % n));
  }
  return build(n, edges);
}

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      edges.emplace_back(u, v);
    }
  }
  return build(n, edges);
}

Graph clique_minus_edge(std::size_t n) {
  if (n < 3) {
    throw Error(ErrorCode::kInfeasibleFamily, "clique_minus_edge needs at least 3 nodes");
  }
  auto edges = complete(n).edges();
  edges.erase(edges.begin());  // {0, 1}
  return build(n, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (NodeId i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return build(10, edges);
}

Graph prism() {
  return build(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph torus(std::size_t w, std::size_t h) {
  if (w < 3 || h < 3) {
    throw Error(ErrorCode::kInfeasibleFamily, "torus sides must be at least 3");
  }
  std::vector<Edge> edges;
  auto id = [w](std::size_t x, std::size_t y) { return static_cast<NodeId>(y * w + x); };
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      edges.emplace_back(id(x, y), id((x + 1) % w, y));
      edges.emplace_back(id(x, y), id(x, (y + 1) % h));
    }
  }
  return build(w * h, edges);
}

Graph regular(std::size_t n, std::size_t d, std::uint64_t seed, std::size_t budget) {
  if (d >= n || (n * d) % 2 != 0) {
    throw Error(ErrorCode::kInfeasibleFamily,
                "no " + std::to_string(d) + "-regular graph on " + std::to_string(n) + " nodes");
  }
  Rng rng(mix_key(seed, 0x7265677531ULL));
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    auto edges = pair_stubs(n, d, rng);
    if (!edges) {
      continue;
    }
    Graph g = build(n, *edges);
    if (is_connected(g)) {
      return g;
    }
  }
  throw Error(ErrorCode::kRejectionBudgetExceeded,
              "regular(" + std::to_string(n) + ", " + std::to_string(d) + ") after " + std::to_string(budget) + " attempts");
}

Graph high_girth(std::size_t n, std::size_t d, std::size_t g_min, std::uint64_t seed, std::size_t budget) {
  if (g_min <= 3) {
    return regular(n, d, seed, budget);
  }
  Rng rng(mix_key(seed, 0x6769727468ULL));
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    auto edges = regular(n, d, mix_key(seed, attempt), budget).edges();
    std::vector<std::vector<NodeId>> adj(n);
    for (const auto& [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    std::vector<std::uint32_t> dist(n, kUnreached);
    std::vector<NodeId> touched;
    std::size_t switches = 0;
    const std::size_t switch_budget = 50 * n + 1000;
    bool dirty = true;
    while (dirty && switches < switch_budget) {
      dirty = false;
      for (std::size_t i = 0; i < edges.size() && switches < switch_budget; ++i) {
        const auto [u, v] = edges[i];
        if (!edge_on_short_cycle(adj, u, v, g_min, dist, touched)) {
          continue;
        }
        // swap with a random edge {x, y}: {u,v},{x,y} -> {u,x},{v,y}
        const std::size_t j = rng.uniform(edges.size());
        auto [x, y] = edges[j];
        if (rng.bernoulli(0.5)) {
          std::swap(x, y);
        }
        ++switches;
        if (x == u || x == v || y == u || y == v || adjacent(adj, u, x) || adjacent(adj, v, y)) {
          dirty = true;
          continue;
        }
        replace_neighbor(adj[u], v, x);
        replace_neighbor(adj[v], u, y);
        replace_neighbor(adj[x], y, u);
        replace_neighbor(adj[y], x, v);
        edges[i] = {std::min(u, x), std::max(u, x)};
        edges[j] = {std::min(v, y), std::max(v, y)};
        dirty = true;
      }
    }
    if (dirty) {
      continue;
    }
    Graph g = build(n, edges);
    if (is_connected(g) && !has_cycle_shorter_than(g, g_min)) {
      return g;
    }
  }
  throw Error(ErrorCode::kRejectionBudgetExceeded, "high_girth(" + std::to_string(n) + ", " + std::to_string(d) +
                                                       ", " + std::to_string(g_min) + ")");
}

Graph gallai(const std::string& spec, std::uint64_t seed) {
  Rng rng(mix_key(seed, 0x67616c6cULL));
  std::vector<Edge> edges;
  std::size_t n = 0;
  for (const auto& token : split(spec, ',')) {
    if (token.size() < 2 || (token[0] != 'K' && token[0] != 'C')) {
      throw Error(ErrorCode::kInfeasibleFamily, "bad block token '" + token + "'");
    }
    const std::size_t k = to_size(token.substr(1));
    if (token[0] == 'K' && k < 2) {
      throw Error(ErrorCode::kInfeasibleFamily, "clique blocks need at least 2 nodes");
    }
    if (token[0] == 'C' && (k < 3 || k % 2 == 0)) {
      throw Error(ErrorCode::kInfeasibleFamily, "cycle blocks must be odd, got " + token);
    }
    // block nodes: the attachment node plus k-1 fresh ones
    std::vector<NodeId> nodes;
    if (n == 0) {
      nodes.push_back(0);
      n = 1;
    } else {
      nodes.push_back(static_cast<NodeId>(rng.uniform(n)));
    }
    for (std::size_t i = 1; i < k; ++i) {
      nodes.push_back(static_cast<NodeId>(n++));
    }
    if (token[0] == 'K') {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          edges.emplace_back(nodes[i], nodes[j]);
        }
      }
    } else {
      for (std::size_t i = 0; i < k; ++i) {
        edges.emplace_back(nodes[i], nodes[(i + 1) % k]);
      }
    }
  }
  return build(n, edges);
}

Graph perturbed_regular(std::size_t n, std::size_t d, std::size_t remove, std::uint64_t seed) {
  Graph g = regular(n, d, seed);
  auto edges = g.edges();
  Rng rng(mix_key(seed, 0x70657274ULL));
  rng.shuffle(std::span<Edge>(edges));
  std::size_t removed = 0;
  for (std::size_t i = 0; i < edges.size() && removed < remove;) {
    std::vector<Edge> trial = edges;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    Graph h = build(n, trial);
    if (is_connected(h) && h.max_degree() == d) {
      edges = std::move(trial);
      ++removed;
    } else {
      ++i;
    }
  }
  return build(n, edges);
}

Graph from_family(const std::string& family, std::uint64_t seed) {
  const auto parts = split(family, ':');
  if (parts.empty()) {
    throw Error(ErrorCode::kParse, "empty family");
  }
  const std::string& name = parts[0];
  auto arg = [&](std::size_t i) {
    if (i >= parts.size()) {
      throw Error(ErrorCode::kParse, "family '" + name + "' needs more arguments");
    }
    return to_size(parts[i]);
  };
  if (name == "path") return path(arg(1));
  if (name == "cycle") return cycle(arg(1));
  if (name == "complete") return complete(arg(1));
  if (name == "clique_minus_edge") return clique_minus_edge(arg(1));
  if (name == "petersen") return petersen();
  if (name == "prism") return prism();
  if (name == "torus") return torus(arg(1), arg(2));
  if (name == "regular") return regular(arg(1), arg(2), seed);
  if (name == "high_girth") return high_girth(arg(1), arg(2), arg(3), seed);
  if (name == "perturbed") return perturbed_regular(arg(1), arg(2), arg(3), seed);
  if (name == "gallai") {
    if (parts.size() < 2) {
      throw Error(ErrorCode::kParse, "gallai needs a block list");
    }
    return gallai(parts[1], seed);
  }
  throw Error(ErrorCode::kParse, "unknown family '" + name + "'");
}

}  // namespace deltacolor::gen
