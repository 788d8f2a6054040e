#include "deltacolor/report.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "deltacolor/errors.hpp"
#include "json.hpp"

namespace deltacolor {

using json = nlohmann::ordered_json;

void RunReport::charge(const std::string& phase, std::size_t rounds) {
  for (auto& [name, count] : phases) {
    if (name == phase) {
      count += rounds;
      return;
    }
  }
  phases.emplace_back(phase, rounds);
}

std::size_t RunReport::total_rounds() const {
  return std::accumulate(phases.begin(), phases.end(), std::size_t{0},
                         [](std::size_t acc, const auto& p) { return acc + p.second; });
}

std::string to_json(const RunReport& report) {
  json phases = json::object();
  for (const auto& [name, rounds] : report.phases) {
    phases[name] = rounds;
  }
  json j;
  j["algorithm"] = report.algorithm;
  j["seed"] = report.seed;
  j["n"] = report.n;
  j["delta"] = report.delta;
  j["phases"] = std::move(phases);
  j["total_rounds"] = report.total_rounds();
  j["valid"] = report.valid;
  j["wall_ms"] = report.wall_ms;
  return j.dump(2) + "\n";
}

RunReport report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    RunReport r;
    r.algorithm = j.at("algorithm").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.n = j.at("n").get<std::size_t>();
    r.delta = j.at("delta").get<std::size_t>();
    for (const auto& [name, rounds] : j.at("phases").items()) {
      r.phases.emplace_back(name, rounds.get<std::size_t>());
    }
    r.valid = j.at("valid").get<bool>();
    r.wall_ms = j.at("wall_ms").get<double>();
    if (j.at("total_rounds").get<std::size_t>() != r.total_rounds()) {
      throw Error(ErrorCode::kParse, "total_rounds does not match the phase sum");
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

void write_report(const RunReport& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIo, "cannot open " + path.string());
  }
  out << to_json(report);
  if (!out) {
    throw Error(ErrorCode::kIo, "write failed for " + path.string());
  }
}

RunReport read_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open " + path.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return report_from_json(buffer.str());
}

}  // namespace deltacolor
