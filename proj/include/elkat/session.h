// One learning session driven by a JSON config:
//   {backend: "el"|"prop", target_file | target: [..], learner, oracle_strategy,
//    pool_bound, budget, seed, agent}
// learner is one of alg3, exact, ex-only, exact-wrapped (the exact learner
// run on epistemic oracles) and epistemic-wrapped (alg3 run on exact oracles).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "elkat/json_io.h"

namespace elkat {

struct SessionConfig {
  std::string backend = "el";
  std::vector<std::string> target;  // one axiom / formula per entry
  std::string learner = "alg3";
  Strategy strategy = Strategy::kSmallestFirst;
  int pool_bound = 2;
  int budget = -1;
  std::uint64_t seed = 1;
  Agent agent = "1";
};

// Relative target_file paths resolve against base_dir. Throws
// std::invalid_argument on malformed configs.
SessionConfig session_config_from_json(const Json& j, const std::string& base_dir = ".");

// Throws PoolExhausted / BudgetExceeded from the oracles, ParseError on bad
// targets.
Json run_session(const SessionConfig& config);

}  // namespace elkat
