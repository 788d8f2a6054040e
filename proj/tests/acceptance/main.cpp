#include <chrono>
#include <exception>
#include <iomanip>
#include <iostream>

#include "common.hpp"

using namespace deltacolor::acceptance;

int main() {
  struct Entry {
    int id;
    const char* title;
    Verdict (*run)();
  };
  const Entry entries[] = {
      {1, "Gallai-tree equivalence", gallai_equivalence},
      {2, "Brooks completion", brooks_completion},
      {3, "deterministic end-to-end", deterministic_end_to_end},
      {4, "randomized end-to-end", randomized_end_to_end},
      {5, "expansion lemmas", expansion_lemmas},
      {6, "BFS uniqueness", bfs_uniqueness},
      {7, "small-Delta global success", small_delta_success},
      {8, "large-Delta shattering", large_delta_shattering},
      {9, "round scaling", round_scaling},
      {10, "determinism", determinism},
  };
  int failures = 0;
  for (const auto& e : entries) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = e.run();
    } catch (const std::exception& ex) {
      v = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += v.pass ? 0 : 1;
    std::cout << "criterion " << std::setw(2) << e.id << " " << (v.pass ? "PASS" : "FAIL") << "  " << e.title
              << ": " << v.detail << " [" << std::fixed << std::setprecision(1) << secs << "s]" << std::endl;
  }
  std::cout << (10 - failures) << "/10 criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
