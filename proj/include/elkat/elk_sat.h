// Satisfiability of ELK: the polynomial procedure for conjunctive formulas
// with its witness construction, and the assignment search for full ELK.

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "elkat/interpretation.h"
#include "elkat/syntax.h"

namespace elkat {

class NotSatisfiable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A conjunctive formula whose agent words contain no adjacent repetition and
// whose conjuncts are pairwise distinct.
struct FlatConjunctiveElk {
  ConjunctiveElk phi;
  bool flattened = true;
};

AgentWord flatten(const AgentWord& sigma);
// Also moves conjuncts with an empty word into omega0; a negated empty-word
// conjunct must then have a single literal (FragmentError otherwise).
FlatConjunctiveElk flatten(const ConjunctiveElk& phi);

// Whether `shorter` is obtained from `longer` by deleting letters.
bool is_subword(const AgentWord& shorter, const AgentWord& longer);

struct FailingCheck {
  int condition = 1;
  AgentWord sigma;                 // condition 2: the negated conjunct
  std::vector<ElLiteral> body;     // condition 1: the unsatisfiable set; 2: the negated body
  std::vector<ElLiteral> pool;     // condition 2: pooled positive bodies (psi)

  friend bool operator==(const FailingCheck&, const FailingCheck&) = default;
};

struct SatVerdict {
  bool satisfiable = false;
  std::optional<PointedElk> witness;
  std::optional<FailingCheck> failing_check;
};

SatVerdict conjunctive_sat(const ConjunctiveElk& phi, bool with_witness = false);

// Precondition: the formula is satisfiable. The point is world 0.
PointedElk witness_model(const FlatConjunctiveElk& phi);

SatVerdict elk_sat(const ElkFormula& phi, bool with_witness = false);

}  // namespace elkat
