#include <gtest/gtest.h>

#include "deltacolor/coloring.hpp"
#include "deltacolor/errors.hpp"
#include "deltacolor/generators.hpp"
#include "deltacolor/oracle.hpp"
#include "deltacolor/structure.hpp"

namespace deltacolor {
namespace {

TEST(OracleColoring, Examples) {
  EXPECT_FALSE(oracle::delta_coloring(gen::complete(4), 3).has_value());
  EXPECT_FALSE(oracle::delta_coloring(gen::cycle(5), 2).has_value());
  const auto c5 = oracle::delta_coloring(gen::cycle(5), 3);
  ASSERT_TRUE(c5.has_value());
  EXPECT_EQ(*c5, (Coloring{1, 2, 1, 2, 3}));
  const Graph p = gen::petersen();
  const auto pc = oracle::delta_coloring(p, 3);
  ASSERT_TRUE(pc.has_value());
  EXPECT_TRUE(verify(p, *pc, 3).ok());
}

TEST(OracleColoring, Cap) {
  try {
    oracle::delta_coloring(gen::cycle(30), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
  EXPECT_TRUE(oracle::delta_coloring(gen::cycle(30), 3, 64).has_value());
}

TEST(OracleColoring, BrooksExistenceOnSmallNiceGraphs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen::perturbed_regular(16, 3 + seed % 3, seed % 4, seed);
    ASSERT_TRUE(is_nice(g));
    EXPECT_TRUE(oracle::delta_coloring(g, static_cast<Color>(g.max_degree())).has_value());
  }
}

TEST(OracleListColoring, RespectsLists) {
  const Graph g = gen::cycle(4);
  const ListAssignment lists{{1, 2}, {2, 3}, {1, 3}, {3, 4}};
  const auto c = oracle::list_coloring(g, lists);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(verify(g, *c, 4, &lists).ok());
  const ListAssignment bad{{1}, {1}, {2}, {3}};
  EXPECT_FALSE(oracle::list_coloring(g, bad).has_value());
}

TEST(OracleChoosable, Examples) {
  EXPECT_TRUE(oracle::degree_choosable(gen::cycle(4), 4));
  EXPECT_FALSE(oracle::degree_choosable(gen::cycle(5), 5));
  EXPECT_TRUE(oracle::degree_choosable(gen::clique_minus_edge(4), 4));
  EXPECT_FALSE(oracle::degree_choosable(gen::complete(4), 6));
  EXPECT_THROW(oracle::degree_choosable(gen::cycle(7), 6), Error);
}

TEST(Verify, Examples) {
  const Graph c6 = gen::cycle(6);
  EXPECT_TRUE(verify(c6, Coloring{1, 2, 3, 1, 2, 3}, 3).ok());

  const auto mono = verify(c6, Coloring{1, 2, 3, 3, 1, 2}, 3);
  EXPECT_EQ(mono.kind, Verdict::Kind::kMonochromaticEdge);
  ASSERT_TRUE(mono.edge.has_value());
  EXPECT_EQ(*mono.edge, (Edge{2, 3}));

  const ListAssignment lists(6, ColorList{1, 2});
  const auto outside = verify(c6, Coloring{1, 2, 1, 2, 1, 3}, 3, &lists);
  EXPECT_EQ(outside.kind, Verdict::Kind::kNotInList);
  EXPECT_EQ(outside.node, NodeId{5});

  EXPECT_EQ(verify(c6, Coloring{1, 2, 0, 2, 1, 2}, 3).kind, Verdict::Kind::kUncolored);
  EXPECT_EQ(verify(c6, Coloring{1, 2, 4, 2, 1, 2}, 3).kind, Verdict::Kind::kOutOfPalette);
  EXPECT_EQ(verify(c6, Coloring{1, 2}, 3).kind, Verdict::Kind::kSizeMismatch);
}

}  // namespace
}  // namespace deltacolor
