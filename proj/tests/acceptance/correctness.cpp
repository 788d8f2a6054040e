#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "common.hpp"
#include "deltacolor/brooks.hpp"
#include "deltacolor/coloring.hpp"
#include "deltacolor/detcolor.hpp"
#include "deltacolor/errors.hpp"
#include "deltacolor/generators.hpp"
#include "deltacolor/oracle.hpp"
#include "deltacolor/random.hpp"
#include "deltacolor/randcolor.hpp"
#include "deltacolor/structure.hpp"

namespace deltacolor::acceptance {
namespace {

// Connected labeled graphs on 4, 5 and 6 nodes.
constexpr std::size_t kConnectedLabeled[] = {38, 728, 26704};
constexpr std::size_t kBrooksInstances = 100;
constexpr double kBrooksSecondsPerInstance = 1.0;
constexpr std::size_t kOracleCap = 64;
constexpr std::size_t kLargeRunSize = 10000;
constexpr std::uint64_t kLargeRunSeeds = 5;

std::string family_for(std::size_t i) {
  static constexpr std::size_t kSizes[] = {40, 150, 500, 2000};
  const std::size_t delta = 3 + i % 6;
  const std::size_t n = kSizes[(i / 6) % 4];
  const std::size_t kind = (i / 24) % 4;
  std::ostringstream f;
  if (kind == 1) {
    f << "perturbed:" << n << ":" << delta << ":" << (n / 50 + 1);
  } else if (kind == 3 && delta == 4) {
    const std::size_t side = std::max<std::size_t>(3, static_cast<std::size_t>(std::sqrt(static_cast<double>(n))));
    f << "torus:" << side << ":" << (n / side);
  } else if (kind == 3 && delta == 3 && n <= 500) {
    f << "high_girth:" << n << ":3:6";
  } else {
    f << "regular:" << n << ":" << delta;
  }
  return f.str();
}

}  // namespace

const std::vector<Instance>& corpus() {
  static const std::vector<Instance> instances = [] {
    std::vector<Instance> out;
    for (std::size_t i = 0; i < 100; ++i) {
      const std::string family = family_for(i);
      out.push_back({family + "@" + std::to_string(i), gen::from_family(family, 1000 + i)});
    }
    return out;
  }();
  return instances;
}

namespace {

// Smallest edge mask over all relabelings.
std::uint32_t canonical(std::uint32_t mask, const std::vector<std::vector<int>>& perms,
                        const std::vector<std::pair<int, int>>& pairs, const std::vector<std::vector<int>>& pair_index) {
  std::uint32_t best = mask;
  for (const auto& p : perms) {
    std::uint32_t m = 0;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (mask >> e & 1u) {
        m |= 1u << pair_index[p[pairs[e].first]][p[pairs[e].second]];
      }
    }
    best = std::min(best, m);
  }
  return best;
}

}  // namespace

Verdict gallai_equivalence() {
  std::size_t graphs = 0;
  std::size_t agree = 0;
  std::size_t oracle_calls = 0;
  bool counts_ok = true;
  for (std::size_t n = 4; n <= 6; ++n) {
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        pair_index[u][v] = pair_index[v][u] = static_cast<int>(pairs.size());
        pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
      }
    }
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::uint32_t, bool> cache;
    std::size_t connected = 0;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if (mask >> e & 1u) {
          edges.emplace_back(pairs[e].first, pairs[e].second);
        }
      }
      const Graph g = Graph::from_edges(n, edges);
      if (!is_connected(g)) {
        continue;
      }
      ++connected;
      const auto key = canonical(mask, perms, pairs, pair_index);
      auto it = cache.find(key);
      if (it == cache.end()) {
        it = cache.emplace(key, oracle::degree_choosable(g, 6)).first;
        ++oracle_calls;
      }
      ++graphs;
      agree += (it->second == !is_gallai_forest(g)) ? 1 : 0;
    }
    counts_ok = counts_ok && connected == kConnectedLabeled[n - 4];
  }
  std::ostringstream d;
  d << agree << "/" << graphs << " connected graphs agree (" << oracle_calls << " isomorphism classes)";
  if (!counts_ok) {
    d << "; enumeration count mismatch";
  }
  return {counts_ok && agree == graphs, d.str()};
}

namespace {

// Oracle coloring computed on the BFS relabeling of g.
std::optional<Coloring> oracle_coloring(const Graph& g, Color k) {
  const auto order = ball(g, 0, kUnreached);
  std::vector<NodeId> rank(g.num_nodes());
  for (NodeId i = 0; i < order.size(); ++i) {
    rank[order[i]] = i;
  }
  std::vector<Edge> edges;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (NodeId w : g.neighbors(u)) {
      if (u < w) {
        edges.emplace_back(rank[u], rank[w]);
      }
    }
  }
  const auto colored = oracle::delta_coloring(Graph::from_edges(g.num_nodes(), edges), k, kOracleCap);
  if (!colored) {
    return std::nullopt;
  }
  Coloring out(g.num_nodes());
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    out[u] = (*colored)[rank[u]];
  }
  return out;
}

}  // namespace

Verdict brooks_completion() {
  std::size_t ok = 0;
  std::size_t tried = 0;
  double slowest = 0.0;
  std::string first_failure;
  for (std::uint64_t i = 0; tried < kBrooksInstances; ++i) {
    const std::size_t delta = 3 + i % 3;
    const std::size_t n = 16 + (i * 7) % 49;  // 16..64
    if (n * delta % 2 != 0 || n <= delta + 1) {
      continue;
    }
    const Graph g = i % 4 == 3 ? gen::perturbed_regular(n, delta, 2, i) : gen::regular(n, delta, i);
    if (!is_nice(g)) {
      continue;
    }
    ++tried;
    const auto start = std::chrono::steady_clock::now();
    auto colors = oracle_coloring(g, static_cast<Color>(delta));
    if (!colors) {
      first_failure = first_failure.empty() ? "oracle found no coloring" : first_failure;
      continue;
    }
    Rng rng(i);
    const auto hole = static_cast<NodeId>(rng.uniform(n));
    (*colors)[hole] = kUncolored;
    const auto result = complete_one_uncolored(g, *colors);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    slowest = std::max(slowest, secs);
    const bool proper = verify(g, result.colors, static_cast<Color>(delta)).ok();
    const bool local = result.outcome.change_radius <= brooks_radius(n, delta);
    if (proper && local && secs <= kBrooksSecondsPerInstance) {
      ++ok;
    } else if (first_failure.empty()) {
      first_failure = "instance " + std::to_string(i);
    }
  }
  std::ostringstream d;
  d << ok << "/" << tried << " completed within radius; slowest " << std::setprecision(3) << slowest << "s";
  if (!first_failure.empty()) {
    d << "; first failure: " << first_failure;
  }
  return {ok == kBrooksInstances, d.str()};
}

Verdict deterministic_end_to_end() {
  std::size_t ok = 0;
  std::size_t runs = 0;
  std::size_t violations = 0;
  for (const auto& inst : corpus()) {
    for (int variant = 0; variant < 2; ++variant) {
      ++runs;
      try {
        const auto r = variant == 0 ? color_det_rulingforest(inst.graph, 1) : color_det_netcomp(inst.graph, 1);
        ok += verify(inst.graph, r.colors, static_cast<Color>(inst.graph.max_degree())).ok() ? 1 : 0;
      } catch (const Error& e) {
        violations += e.code() == ErrorCode::kLayerListViolation ? 1 : 0;
      }
    }
  }
  std::ostringstream d;
  d << ok << "/" << runs << " proper (ruling-forest and network-decomposition); " << violations
    << " LayerListViolation";
  return {ok == runs && violations == 0, d.str()};
}

Verdict randomized_end_to_end() {
  std::size_t completed = 0;
  std::size_t proper = 0;
  std::size_t too_large = 0;
  std::size_t other_errors = 0;
  std::size_t repairs = 0;
  auto attempt = [&](const Graph& g, RandVariant variant, std::uint64_t seed) {
    try {
      const auto r = run_randomized(g, variant, seed);
      ++completed;
      proper += verify(g, r.colors, static_cast<Color>(g.max_degree())).ok() ? 1 : 0;
      repairs += r.repairs;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kComponentTooLarge) {
        ++too_large;
      } else {
        ++other_errors;
      }
    }
  };
  auto variants = [](std::size_t delta) {
    std::vector<RandVariant> out;
    if (delta >= 4) {
      out.push_back(RandVariant::kLargeDelta);
    }
    if (delta <= 6) {
      out.push_back(RandVariant::kSmallDelta);
    }
    return out;
  };
  for (const auto& inst : corpus()) {
    for (auto v : variants(inst.graph.max_degree())) {
      attempt(inst.graph, v, 1);
    }
  }
  for (std::size_t delta : {3, 4, 6, 8}) {
    const Graph g = gen::regular(kLargeRunSize, delta, 77 + delta);
    for (std::uint64_t seed = 0; seed < kLargeRunSeeds; ++seed) {
      for (auto v : variants(delta)) {
        attempt(g, v, seed);
      }
    }
  }
  std::ostringstream d;
  d << proper << "/" << completed << " completed runs proper; ComponentTooLarge " << too_large << "; other errors "
    << other_errors << "; repaired nodes " << repairs;
  return {proper == completed && too_large == 0 && other_errors == 0, d.str()};
}

}  // namespace deltacolor::acceptance
