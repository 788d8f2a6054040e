#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "deltacolor/generators.hpp"
#include "deltacolor/io.hpp"
#include "deltacolor/report.hpp"

namespace deltacolor::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("deltacolor_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string save(const std::string& name, const Graph& g) const {
    write_graph(fs::path(path(name)), g);
    return path(name);
  }

  int call(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return run_cli(args, out_, err_);
  }

  static std::string slurp(const std::string& file) {
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, RunWritesFiles) {
  const auto g = save("g.edges", gen::petersen());
  EXPECT_EQ(call({"run", "--algo", "det", "--graph", g, "--seed", "1", "--out", path("c.txt"), "--report",
                  path("r.json"), "--validate"}),
            kExitOk);
  const auto colors = read_coloring(fs::path(path("c.txt")), 10);
  EXPECT_TRUE(verify(gen::petersen(), colors, 3).ok());
  const auto report = read_report(fs::path(path("r.json")));
  EXPECT_EQ(report.algorithm, "det");
  EXPECT_TRUE(report.valid);
  EXPECT_EQ(report.wall_ms, 0.0);
}

TEST_F(CliTest, NotNiceExitsOne) {
  const auto g = save("k4.edges", gen::complete(4));
  EXPECT_EQ(call({"run", "--algo", "rand-small", "--graph", g}), kExitFailure);
  EXPECT_NE(err_.str().find("NotNice"), std::string::npos);
}

TEST_F(CliTest, OracleOnFourCycle) {
  const auto g = save("c4.edges", gen::cycle(4));
  EXPECT_EQ(call({"oracle", "--mode", "choosable", "--graph", g}), kExitOk);
  EXPECT_EQ(out_.str(), "true\n");
  const auto c5 = save("c5.edges", gen::cycle(5));
  EXPECT_EQ(call({"oracle", "--mode", "choosable", "--graph", c5}), kExitOk);
  EXPECT_EQ(out_.str(), "false\n");
}

TEST_F(CliTest, UsageErrors) {
  const auto g = save("g.edges", gen::petersen());
  EXPECT_EQ(call({"run", "--algo", "nope", "--graph", g}), kExitUsage);
  EXPECT_EQ(call({"run", "--algo", "det"}), kExitUsage);
  EXPECT_EQ(call({"run", "--algo", "det", "--graph", path("missing.edges")}), kExitUsage);
  EXPECT_EQ(call({"run", "--algo", "det", "--graph", g, "--param", "r=3"}), kExitUsage);
  EXPECT_EQ(call({"run", "--algo", "rand-small", "--graph", g, "--param", "zz=3"}), kExitUsage);
  EXPECT_EQ(call({"run", "--algo", "brooks", "--graph", g}), kExitUsage);
  EXPECT_EQ(call({}), kExitUsage);
}

TEST_F(CliTest, DeterministicFiles) {
  const auto g = save("g.edges", gen::regular(300, 4, 3));
  for (const std::string algo : {"det", "netcomp", "rand"}) {
    ASSERT_EQ(call({"run", "--algo", algo, "--graph", g, "--seed", "5", "--out", path("a.txt"), "--report", path("a.json")}),
              kExitOk);
    ASSERT_EQ(call({"run", "--algo", algo, "--graph", g, "--seed", "5", "--out", path("b.txt"), "--report", path("b.json")}),
              kExitOk);
    EXPECT_EQ(slurp(path("a.txt")), slurp(path("b.txt")));
    EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  }
}

TEST_F(CliTest, GenCheckAndBrooks) {
  ASSERT_EQ(call({"gen", "--family", "torus:4:4", "--seed", "2", "--out", path("t.edges")}), kExitOk);
  const Graph t = read_graph(fs::path(path("t.edges")));
  EXPECT_EQ(t.num_nodes(), 16u);
  // 4x4 torus: checkerboard 2-coloring, then open one hole.
  Coloring colors(16);
  for (NodeId v = 0; v < 16; ++v) {
    colors[v] = 1 + (v % 4 + v / 4) % 2;
  }
  write_coloring(fs::path(path("full.txt")), colors);
  EXPECT_EQ(call({"check", "--graph", path("t.edges"), "--coloring", path("full.txt")}), kExitOk);
  EXPECT_EQ(out_.str(), "valid\n");
  colors[5] = colors[6];
  write_coloring(fs::path(path("bad.txt")), colors);
  EXPECT_EQ(call({"check", "--graph", path("t.edges"), "--coloring", path("bad.txt")}), kExitFailure);
  colors[5] = kUncolored;
  write_coloring(fs::path(path("hole.txt")), colors);
  EXPECT_EQ(call({"run", "--algo", "brooks", "--graph", path("t.edges"), "--partial", path("hole.txt"), "--out",
                  path("done.txt")}),
            kExitOk);
  EXPECT_EQ(call({"check", "--graph", path("t.edges"), "--coloring", path("done.txt")}), kExitOk);
}

TEST_F(CliTest, MaxRounds) {
  const auto g = save("g.edges", gen::petersen());
  EXPECT_EQ(call({"run", "--algo", "det", "--graph", g, "--max-rounds", "1"}), kExitFailure);
  EXPECT_NE(err_.str().find("RoundLimitExceeded"), std::string::npos);
}

TEST_F(CliTest, StatsJson) {
  const auto g = save("g.edges", gen::petersen());
  EXPECT_EQ(call({"stats", "--algo", "rand-small", "--graph", g, "--count", "3"}), kExitOk);
  const std::string text = out_.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '{'), 6);  // 3 objects, 3 histograms
  EXPECT_NE(text.find("\"unhappy_fraction\""), std::string::npos);
}

}  // namespace
}  // namespace deltacolor::cli
