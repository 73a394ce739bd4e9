// Exhaustive bounded model search, used as ground truth in differential tests.
// Sound for SAT; a negative answer only means "no model within the bounds".

#pragma once

#include <optional>
#include <vector>

#include "elkat/interpretation.h"
#include "elkat/syntax.h"

namespace elkat {

struct BruteForceBounds {
  int max_worlds = 3;
  int max_domain = 3;
};

struct BruteForceResult {
  enum class Verdict { kSat, kNoModelWithinBounds };

  Verdict verdict = Verdict::kNoModelWithinBounds;
  std::optional<PointedElk> model;

  bool sat() const { return verdict == Verdict::kSat; }
};

// First model over sig(alpha) in the order: domain size, individual map
// (restricted growth), concept extensions, role extensions.
std::optional<ElInterpretation> brute_force_el_sat(const ElFormula& alpha, int max_domain);
std::optional<ElInterpretation> brute_force_literals_sat(const std::vector<ElLiteral>& literals, int max_domain);

// Searches pointed structures whose worlds are all connected to the point,
// in the order: number of worlds, agent partitions (the first agent's up to
// renaming of the non-point worlds), atom truth values, world valuations.
BruteForceResult brute_force_elk_sat(const ElkFormula& phi, BruteForceBounds bounds);
BruteForceResult brute_force_elk_sat(const ConjunctiveElk& phi, BruteForceBounds bounds);

// 1 + total flattened modal depth of the negated conjuncts; for a general
// formula every K-atom counts, since its polarity may flip.
int default_world_bound(const ConjunctiveElk& phi);
int default_world_bound(const ElkFormula& phi);

}  // namespace elkat
