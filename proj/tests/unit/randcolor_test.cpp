#include <gtest/gtest.h>

#include <cmath>

#include "deltacolor/errors.hpp"
#include "deltacolor/generators.hpp"
#include "deltacolor/randcolor.hpp"
#include "deltacolor/structure.hpp"

namespace deltacolor {
namespace {

RandParams small_params(std::uint32_t r, double p, std::uint32_t b) {
  RandParams params;
  params.marking = {p, b, r};
  params.beta = 6 * r;
  params.s = params.beta * (r + 1);
  params.component_cap = 1u << 30;
  params.r_small = 8;
  return params;
}

std::vector<NodeId> all_layered(const LayerDecomposition& d) {
  std::vector<NodeId> out;
  for (const auto& layer : d.layers) {
    out.insert(out.end(), layer.begin(), layer.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(RandParamsTest, Radii) {
  EXPECT_EQ(large_delta_r(4), 74u);
  EXPECT_EQ(large_delta_r(6), 44u);
  EXPECT_EQ(large_delta_r(8), 38u);
  EXPECT_EQ(small_delta_r(100000), 30u);
  EXPECT_EQ(small_delta_r(16), 12u);
  EXPECT_EQ(small_delta_r(3), 6u);
  EXPECT_EQ(default_component_cap(1024, 3, 1), 90u);
  EXPECT_EQ(small_component_radius(1000, 3, 77), 77u);
  EXPECT_EQ(small_component_radius(1024, 4, 1000), 21u);
}

TEST(RandParamsTest, VariantCoverage) {
  EXPECT_THROW(rand_params(100, 3, RandVariant::kLargeDelta), Error);
  EXPECT_THROW(rand_params(100, 7, RandVariant::kSmallDelta), Error);
  const auto p = rand_params(1000, 5, RandVariant::kLargeDelta);
  EXPECT_EQ(p.marking.b, 6u);
  EXPECT_DOUBLE_EQ(p.marking.p, std::pow(5.0, -6.0));
  EXPECT_EQ(p.beta, 6 * p.marking.r);
  EXPECT_EQ(p.s, p.beta * (p.marking.r + 1));
  const auto q = rand_params(1000, 3, RandVariant::kSmallDelta);
  EXPECT_EQ(q.marking.b, 12u);
  EXPECT_EQ(q.marking.r % 6, 0u);
}

TEST(PhaseOneTest, SingleFourCycle) {
  const auto out = remove_small_dccs(gen::cycle(4), small_params(2, 0.1, 6));
  ASSERT_EQ(out.layers.layers.size(), 1u);
  EXPECT_EQ(out.layers.layers[0], (std::vector<NodeId>{0, 1, 2, 3}));
  EXPECT_EQ(std::count(out.in_h.begin(), out.in_h.end(), 1), 0);
}

TEST(PhaseOneTest, PetersenIsSwallowed) {
  const Graph g = gen::petersen();
  const auto out = remove_small_dccs(g, small_params(3, 0.1, 6));
  EXPECT_EQ(out.selecting, 10u);
  EXPECT_EQ(std::count(out.in_h.begin(), out.in_h.end(), 1), 0);
  EXPECT_EQ(all_layered(out.layers).size(), 10u);
}

TEST(PhaseOneTest, HighGirthKeepsEverything) {
  const Graph g = gen::high_girth(300, 3, 8, 5);
  const auto out = remove_small_dccs(g, small_params(2, 0.1, 6));
  EXPECT_EQ(out.selecting, 0u);
  EXPECT_TRUE(out.layers.layers.empty());
  EXPECT_EQ(std::count(out.in_h.begin(), out.in_h.end(), 1), 300);
}

TEST(PhaseOneTest, RemainderHasNoShortDcc) {
  const Graph g = gen::regular(400, 4, 9);
  const auto params = small_params(2, 0.1, 6);
  const auto out = remove_small_dccs(g, params);
  std::vector<NodeId> rest;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (out.in_h[v]) {
      rest.push_back(v);
    }
  }
  const Subgraph h = induced_subgraph(g, rest);
  for (NodeId v = 0; v < h.graph.num_nodes(); ++v) {
    EXPECT_FALSE(find_dcc_within_radius(h.graph, v, 2).has_value());
  }
  for (std::size_t i = 0; i < out.base_dccs.size(); ++i) {
    for (std::size_t j = i + 1; j < out.base_dccs.size(); ++j) {
      for (NodeId a : out.base_dccs[i]) {
        for (NodeId b : out.base_dccs[j]) {
          EXPECT_NE(a, b);
          EXPECT_FALSE(g.has_edge(a, b));
        }
      }
    }
  }
}

TEST(MarkingTest, AdjacentSelectionsBackOff) {
  MarkingParams params{1.0, 1, 2};
  const auto out = marking_process(gen::petersen(), params, 3);
  EXPECT_EQ(out.selected, 10u);
  EXPECT_TRUE(out.tnodes.empty());
  EXPECT_TRUE(out.marked.empty());
}

TEST(MarkingTest, EmptyRemainder) {
  const Graph g = gen::petersen();
  const auto out = marking_process(g, {1.0, 6, 2}, 3, std::vector<char>(10, 0));
  EXPECT_EQ(out.selected, 0u);
  EXPECT_TRUE(out.tnodes.empty());
}

TEST(MarkingTest, Invariants) {
  const Graph g = gen::regular(3000, 4, 2);
  const MarkingParams params{0.02, 3, 4};
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto out = marking_process(g, params, seed);
    EXPECT_GT(out.tnodes.size(), 0u);
    EXPECT_EQ(out.marked.size(), 2 * out.tnodes.size());
    for (NodeId t : out.tnodes) {
      const auto dist = bfs_distances(g, std::span<const NodeId>(&t, 1), params.b);
      for (NodeId u : out.tnodes) {
        EXPECT_TRUE(u == t || dist[u] == kUnreached);
      }
      std::vector<NodeId> marks;
      for (NodeId w : g.neighbors(t)) {
        if (out.status[w] == MarkStatus::kMarked) {
          marks.push_back(w);
        }
      }
      ASSERT_EQ(marks.size(), 2u);
      EXPECT_FALSE(g.has_edge(marks[0], marks[1]));
    }
    EXPECT_EQ(out.tnodes, marking_process(g, params, seed).tnodes);
  }
}

TEST(MarkingTest, SurvivalMatchesEstimate) {
  const Graph g = gen::regular(10000, 3, 17);
  const MarkingParams params{1e-4, 12, 2};
  // Survival estimate averaged over every 20th node's ball.
  double expected = 0.0;
  std::size_t sampled = 0;
  for (NodeId v = 0; v < g.num_nodes(); v += 20, ++sampled) {
    const double size = static_cast<double>(ball(g, v, params.b).size());
    expected += params.p * std::pow(1.0 - params.p, size - 1.0);
  }
  expected *= static_cast<double>(g.num_nodes()) / static_cast<double>(sampled);
  double measured = 0.0;
  const int seeds = 100;
  for (int seed = 0; seed < seeds; ++seed) {
    measured += static_cast<double>(marking_process(g, params, seed).tnodes.size());
  }
  measured /= seeds;
  EXPECT_NEAR(measured / expected, 1.0, 0.3) << "measured " << measured << " expected " << expected;
}

TEST(HappyLayersTest, LayerStructure) {
  const Graph g = gen::perturbed_regular(3000, 4, 20, 4);
  const MarkingParams params{2e-3, 3, 4};
  const std::size_t delta = g.max_degree();
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto marking = marking_process(g, params, seed);
    const auto happy = build_happy_layers(g, marking, params);
    ASSERT_FALSE(happy.layers.layers.empty());
    std::vector<int> layer_of(g.num_nodes(), -1);
    for (std::size_t i = 0; i < happy.layers.layers.size(); ++i) {
      for (NodeId v : happy.layers.layers[i]) {
        layer_of[v] = static_cast<int>(i);
      }
    }
    std::vector<char> kept(g.num_nodes(), 0);
    for (NodeId v : happy.kept_marks) {
      kept[v] = 1;
    }
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      if (g.degree(v) < delta) {
        EXPECT_EQ(layer_of[v], 0);
      }
      if (layer_of[v] > 0) {
        bool has_parent = false;
        for (NodeId w : g.neighbors(v)) {
          has_parent = has_parent || layer_of[w] == layer_of[v] - 1;
        }
        EXPECT_TRUE(has_parent);
      }
      EXPECT_FALSE(kept[v] && layer_of[v] >= 0);
    }
    for (NodeId t : marking.tnodes) {
      std::size_t marks = 0;
      for (NodeId w : g.neighbors(t)) {
        marks += kept[w];
      }
      if (marks == 2) {
        EXPECT_EQ(layer_of[t], 0);
      }
    }
    // Leftover nodes are unhappy and far from the boundary.
    std::vector<char> blocked(g.num_nodes(), 1);
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      blocked[v] = marking.status[v] == MarkStatus::kMarked ? 0 : 1;
    }
    const auto reach = distance_layers(g, marking.tnodes, params.r, blocked);
    const auto near = bfs_distances(g, happy.boundary, params.r);
    std::vector<char> happy_mask(g.num_nodes(), 0);
    for (NodeId v : all_layered(reach)) {
      happy_mask[v] = 1;
    }
    for (NodeId v : happy.leftover) {
      EXPECT_EQ(layer_of[v], -1);
      EXPECT_FALSE(happy_mask[v]);
      EXPECT_EQ(near[v], kUnreached);
    }
    EXPECT_EQ(happy.leftover.size() + happy.kept_marks.size() + happy.layers.covered(), g.num_nodes());
  }
}

TEST(HappyLayersTest, TNodeAndLowDegree) {
  // A 4-regular graph with one edge removed: both endpoints have degree 3.
  const Graph g = gen::perturbed_regular(500, 4, 1, 8);
  const MarkingParams params{0.05, 3, 2};
  const auto marking = marking_process(g, params, 1);
  const auto happy = build_happy_layers(g, marking, params);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (g.degree(v) == 3) {
      EXPECT_TRUE(std::binary_search(happy.layers.layers[0].begin(), happy.layers.layers[0].end(), v));
    }
  }
}

TEST(SmallComponentsTest, EmptyLeftover) {
  Coloring colors(10, kUncolored);
  const auto stats = color_small_components(gen::petersen(), {}, colors, small_params(2, 0.1, 6), 1);
  EXPECT_EQ(stats.components, 0u);
  EXPECT_EQ(std::count(colors.begin(), colors.end(), kUncolored), 10);
}

TEST(SmallComponentsTest, OneFreeNode) {
  Coloring colors(10, kUncolored);
  const std::vector<NodeId> leftover{0};
  const auto stats = color_small_components(gen::petersen(), leftover, colors, small_params(2, 0.1, 6), 1);
  EXPECT_EQ(stats.components, 1u);
  EXPECT_EQ(stats.max_layers, 1u);
  EXPECT_EQ(stats.unresolved, 0u);
  EXPECT_NE(colors[0], kUncolored);
}

TEST(SmallComponentsTest, TooLarge) {
  Coloring colors(10, kUncolored);
  const std::vector<NodeId> leftover{0, 1, 2};
  auto params = small_params(2, 0.1, 6);
  params.component_cap = 2;
  try {
    color_small_components(gen::petersen(), leftover, colors, params, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kComponentTooLarge);
  }
}

TEST(RandomizedTest, Examples) {
  for (auto variant : {RandVariant::kSmallDelta}) {
    const auto r = run_randomized(gen::petersen(), variant, 4);
    EXPECT_TRUE(r.report.valid);
    EXPECT_TRUE(verify(gen::petersen(), r.colors, 3).ok());
  }
  EXPECT_THROW(run_randomized(gen::complete(5), RandVariant::kLargeDelta, 1), Error);
  const Graph g = gen::regular(600, 6, 3);
  const auto r = run_randomized(g, RandVariant::kLargeDelta, 2);
  EXPECT_TRUE(r.report.valid);
  EXPECT_EQ(r.report.algorithm, "rand");
  EXPECT_EQ(r.c0_without_free_color, 0u);
}

TEST(RandomizedTest, ShatteredRunsColorEverything) {
  // Triangle-free graphs have no degree-choosable component of radius 1, so
  // with r = 1 Phase I keeps everything and marking and leftovers do the work.
  RandConfig config;
  config.r = 1;
  config.b = 3;
  config.p = 3e-3;
  for (std::size_t d : {3, 4, 5}) {
    const Graph g = gen::high_girth(1500, d, 4, d + 10);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto r = run_randomized(g, d == 3 ? RandVariant::kSmallDelta : RandVariant::kLargeDelta, seed, config);
      EXPECT_TRUE(r.report.valid) << d << " " << seed;
      EXPECT_EQ(r.c0_without_free_color, 0u);
      EXPECT_GT(r.stats.h_size, 0u);
      EXPECT_GT(r.tnodes, 0u);
      const auto again = run_randomized(g, d == 3 ? RandVariant::kSmallDelta : RandVariant::kLargeDelta, seed, config);
      EXPECT_EQ(r.colors, again.colors);
    }
  }
}

TEST(ShatteringTest, TrivialInputs) {
  const std::vector<std::uint64_t> seeds{1, 2};
  const auto empty = shattering_stats(Graph(), {0.1, 6, 2}, seeds);
  ASSERT_EQ(empty.size(), 2u);
  EXPECT_EQ(empty[0].unhappy_fraction, 0.0);
  EXPECT_EQ(empty[0].max_component, 0u);
  const auto single = shattering_stats(Graph::from_edges(1, {}), {0.1, 6, 2}, seeds, RandVariant::kLargeDelta, 3);
  EXPECT_EQ(single[0].unhappy_fraction, 0.0);
}

TEST(ShatteringTest, JsonShape) {
  ShatteringStats s;
  s.seed = 7;
  s.component_histogram[3] = 2;
  const std::string json = to_json(s);
  EXPECT_LT(json.find("\"seed\""), json.find("\"unhappy_fraction\""));
  EXPECT_LT(json.find("\"max_component\""), json.find("\"component_histogram\""));
  EXPECT_NE(json.find("\"3\": 2"), std::string::npos);
}

}  // namespace
}  // namespace deltacolor
