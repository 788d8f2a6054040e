#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace deltacolor {

struct RunReport {
  std::string algorithm;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t delta = 0;
  std::vector<std::pair<std::string, std::size_t>> phases;  // in execution order
  bool valid = false;
  double wall_ms = 0.0;

  // Adds to an existing phase of the same name.
  void charge(const std::string& phase, std::size_t rounds);
  std::size_t total_rounds() const;
};

// Pretty-printed JSON with a trailing newline. Phases keep execution order.
std::string to_json(const RunReport& report);
RunReport report_from_json(const std::string& text);

// Throws Error(kIo) when the file cannot be written.
void write_report(const RunReport& report, const std::filesystem::path& path);
RunReport read_report(const std::filesystem::path& path);

}  // namespace deltacolor
