#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>

#include "deltacolor/brooks.hpp"
#include "deltacolor/coloring.hpp"
#include "deltacolor/detcolor.hpp"
#include "deltacolor/errors.hpp"
#include "deltacolor/generators.hpp"
#include "deltacolor/io.hpp"
#include "deltacolor/oracle.hpp"
#include "deltacolor/randcolor.hpp"
#include "deltacolor/report.hpp"
#include "deltacolor/structure.hpp"

namespace deltacolor::cli {
namespace {

struct Options {
  std::string algo;
  std::string graph;
  std::string out;
  std::string report;
  std::string partial;
  std::string family;
  std::string coloring;
  std::string mode = "choosable";
  std::uint64_t seed = 0;
  std::size_t max_rounds = 0;
  std::size_t count = 1;
  std::size_t palette = 0;
  std::size_t cap = oracle::kDefaultColoringCap;
  bool validate = false;
  bool timing = false;
  bool direct = false;
  std::vector<std::string> params;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw UsageError("bad value for " + key + ": " + text);
  }
  return value;
}

RandConfig rand_config(const std::vector<std::string>& params) {
  RandConfig config;
  for (const auto& kv : params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw UsageError("--param expects key=value, got " + kv);
    }
    const std::string key = kv.substr(0, eq);
    const std::string value = kv.substr(eq + 1);
    if (key == "r") {
      config.r = parse_number<std::uint32_t>(key, value);
    } else if (key == "b") {
      config.b = parse_number<std::uint32_t>(key, value);
    } else if (key == "N") {
      config.component_cap = parse_number<std::uint64_t>(key, value);
    } else if (key == "p") {
      try {
        config.p = std::stod(value);
      } catch (const std::exception&) {
        throw UsageError("bad value for p: " + value);
      }
    } else if (key == "c") {
      config.small_delta_c = static_cast<double>(parse_number<std::uint32_t>(key, value));
    } else if (key == "cap") {
      config.small_delta_cap = parse_number<std::size_t>(key, value);
    } else {
      throw UsageError("unknown parameter " + key);
    }
  }
  return config;
}

struct Outcome {
  Coloring colors;
  RunReport report;
  std::optional<ShatteringStats> stats;
};

Outcome run_algorithm(const Graph& g, const Options& o) {
  const bool randomized = o.algo == "rand" || o.algo == "rand-small";
  if (!randomized && !o.params.empty()) {
    throw UsageError("--param applies to rand and rand-small only");
  }
  Outcome result;
  if (o.algo == "brooks") {
    if (o.partial.empty()) {
      throw UsageError("--algo brooks needs --partial");
    }
    const auto partial = read_coloring(std::filesystem::path(o.partial), g.num_nodes());
    auto completed = complete_one_uncolored(g, partial);
    result.colors = std::move(completed.colors);
    result.report.algorithm = "brooks";
    result.report.seed = o.seed;
    result.report.n = g.num_nodes();
    result.report.delta = g.max_degree();
    result.report.charge("brooks", completed.outcome.rounds);
    result.report.valid = verify(g, result.colors, static_cast<Color>(g.max_degree())).ok();
  } else if (o.algo == "det" || o.algo == "netcomp") {
    auto r = o.algo == "det" ? color_det_rulingforest(g, o.seed) : color_det_netcomp(g, o.seed);
    result.colors = std::move(r.colors);
    result.report = std::move(r.report);
  } else if (randomized) {
    const auto variant = o.algo == "rand" ? RandVariant::kLargeDelta : RandVariant::kSmallDelta;
    auto r = run_randomized(g, variant, o.seed, rand_config(o.params));
    result.colors = std::move(r.colors);
    result.report = std::move(r.report);
    result.stats = std::move(r.stats);
  } else {
    throw UsageError("unknown algorithm " + o.algo);
  }
  return result;
}

int cmd_run(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = read_graph(std::filesystem::path(o.graph));
  auto result = run_algorithm(g, o);
  if (!o.timing) {
    result.report.wall_ms = 0.0;
  }
  if (!o.out.empty()) {
    write_coloring(std::filesystem::path(o.out), result.colors);
  }
  if (!o.report.empty()) {
    write_report(result.report, std::filesystem::path(o.report));
  }
  out << result.report.algorithm << " n=" << result.report.n << " delta=" << result.report.delta
      << " rounds=" << result.report.total_rounds() << " valid=" << (result.report.valid ? "true" : "false") << "\n";
  if (o.validate) {
    const auto verdict = verify(g, result.colors, static_cast<Color>(g.max_degree()));
    if (!verdict.ok()) {
      err << "verification failed: " << verdict.message << "\n";
      return kExitFailure;
    }
  }
  if (!result.report.valid) {
    err << "verification failed\n";
    return kExitFailure;
  }
  if (o.max_rounds > 0 && result.report.total_rounds() > o.max_rounds) {
    err << "RoundLimitExceeded: " << result.report.total_rounds() << " rounds, limit " << o.max_rounds << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const Graph g = gen::from_family(o.family, o.seed);
  if (o.out.empty()) {
    write_graph(out, g);
  } else {
    write_graph(std::filesystem::path(o.out), g);
  }
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Graph g = read_graph(std::filesystem::path(o.graph));
  const auto colors = read_coloring(std::filesystem::path(o.coloring), g.num_nodes());
  const auto palette = static_cast<Color>(o.palette == 0 ? g.max_degree() : o.palette);
  const auto verdict = verify(g, colors, palette);
  out << (verdict.ok() ? std::string("valid") : std::string(to_string(verdict.kind)) + ": " + verdict.message)
      << "\n";
  return verdict.ok() ? kExitOk : kExitFailure;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const Graph g = read_graph(std::filesystem::path(o.graph));
  if (o.mode == "choosable") {
    out << (oracle::degree_choosable(g) ? "true" : "false") << "\n";
    return kExitOk;
  }
  if (o.mode == "gallai") {
    out << (is_gallai_forest(g) ? "true" : "false") << "\n";
    return kExitOk;
  }
  if (o.mode == "color") {
    const auto k = static_cast<Color>(o.palette == 0 ? g.max_degree() : o.palette);
    const auto colors = oracle::delta_coloring(g, k, o.cap);
    if (!colors) {
      out << "none\n";
      return kExitFailure;
    }
    write_coloring(out, *colors);
    return kExitOk;
  }
  throw UsageError("unknown oracle mode " + o.mode);
}

int cmd_stats(const Options& o, std::ostream& out) {
  if (o.algo != "rand" && o.algo != "rand-small") {
    throw UsageError("stats needs --algo rand or rand-small");
  }
  const Graph g = read_graph(std::filesystem::path(o.graph));
  const auto variant = o.algo == "rand" ? RandVariant::kLargeDelta : RandVariant::kSmallDelta;
  const auto config = rand_config(o.params);
  std::vector<std::uint64_t> seeds(o.count);
  for (std::size_t i = 0; i < o.count; ++i) {
    seeds[i] = o.seed + i;
  }
  std::vector<ShatteringStats> all;
  if (o.direct) {
    const auto params = rand_params(g.num_nodes(), g.max_degree(), variant, config);
    all = shattering_stats(g, params.marking, seeds, variant);
  } else {
    for (auto seed : seeds) {
      all.push_back(run_randomized(g, variant, seed, config).stats);
    }
  }
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const auto& s : all) {
    array.push_back(nlohmann::ordered_json::parse(to_json(s)));
  }
  out << array.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Delta-coloring workbench"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> algos{"brooks", "det", "netcomp", "rand", "rand-small"};

  auto* run = app.add_subcommand("run", "color a graph");
  run->add_option("--algo", o.algo, "algorithm")->required()->check(CLI::IsMember(algos));
  run->add_option("--graph", o.graph, "edge list")->required();
  run->add_option("--seed", o.seed);
  run->add_option("--out", o.out, "coloring output");
  run->add_option("--report", o.report, "JSON report output");
  run->add_option("--partial", o.partial, "partial coloring with one hole (brooks)");
  run->add_flag("--validate", o.validate);
  run->add_flag("--timing", o.timing, "record wall-clock time in the report");
  run->add_option("--max-rounds", o.max_rounds);
  run->add_option("--param", o.params, "key=value: r, b, N, p, c, cap");

  auto* gen_cmd = app.add_subcommand("gen", "generate a graph");
  gen_cmd->add_option("--family", o.family, "e.g. regular:1000:3, torus:4:4, gallai:K4,C5")->required();
  gen_cmd->add_option("--seed", o.seed);
  gen_cmd->add_option("--out", o.out);

  auto* check = app.add_subcommand("check", "verify a coloring");
  check->add_option("--graph", o.graph)->required();
  check->add_option("--coloring", o.coloring)->required();
  check->add_option("--palette", o.palette, "defaults to the maximum degree");

  auto* orc = app.add_subcommand("oracle", "exact answers for small graphs");
  orc->add_option("--mode", o.mode)->check(CLI::IsMember({"choosable", "gallai", "color"}));
  orc->add_option("--graph", o.graph)->required();
  orc->add_option("--palette", o.palette);
  orc->add_option("--cap", o.cap, "node limit for color mode");

  auto* stats = app.add_subcommand("stats", "shattering statistics as JSON");
  stats->add_option("--algo", o.algo)->required()->check(CLI::IsMember({"rand", "rand-small"}));
  stats->add_option("--graph", o.graph)->required();
  stats->add_option("--seed", o.seed, "first seed");
  stats->add_option("--count", o.count, "number of consecutive seeds");
  stats->add_option("--param", o.params);
  stats->add_flag("--direct", o.direct, "mark the whole graph, skipping the first phase");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run) {
      return cmd_run(o, out, err);
    }
    if (*gen_cmd) {
      return cmd_gen(o, out);
    }
    if (*check) {
      return cmd_check(o, out);
    }
    if (*orc) {
      return cmd_oracle(o, out);
    }
    return cmd_stats(o, out);
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    const bool input = e.code() == ErrorCode::kIo || e.code() == ErrorCode::kParse;
    return input ? kExitUsage : kExitFailure;
  }
}

}  // namespace deltacolor::cli
