#pragma once

#include <string>
#include <vector>

#include "deltacolor/graph.hpp"

namespace deltacolor::acceptance {

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Instance {
  std::string name;
  Graph graph;
};

// 100 nice graphs, 3 <= Delta <= 8, n <= 2000; fixed seeds.
const std::vector<Instance>& corpus();

Verdict gallai_equivalence();       // 1
Verdict brooks_completion();        // 2
Verdict deterministic_end_to_end(); // 3
Verdict randomized_end_to_end();    // 4
Verdict expansion_lemmas();         // 5
Verdict bfs_uniqueness();           // 6
Verdict small_delta_success();      // 7
Verdict large_delta_shattering();   // 8
Verdict round_scaling();            // 9
Verdict determinism();              // 10

}  // namespace deltacolor::acceptance
