// Finite EL interpretations, finite S5-style Kripke structures over them, and
// model checking for EL and ELK formulas.

#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "elkat/syntax.h"

namespace elkat {

// Referencing an individual the interpretation does not map.
class InterpretationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedStructure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Element = int;
using ElementPair = std::pair<int, int>;

// Domain is {0, ..., domain_size - 1}. Unmapped concept and role names are
// empty.
struct ElInterpretation {
  int domain_size = 1;
  std::map<std::string, std::set<Element>> concepts;
  std::map<std::string, std::set<ElementPair>> roles;
  std::map<std::string, Element> individuals;

  Element individual(const std::string& name) const;
  // Throws InterpretationError when an element is out of range.
  void validate() const;

  friend bool operator==(const ElInterpretation&, const ElInterpretation&) = default;
};

// Disjoint union; individuals are taken from `a` only.
ElInterpretation disjoint_union(const ElInterpretation& a, const ElInterpretation& b,
                                Element* offset_of_b = nullptr);

std::set<Element> eval_concept(const ElInterpretation& interp, const Concept& c);
bool check_el(const ElInterpretation& interp, const ElAxiom& axiom);
bool check_el(const ElInterpretation& interp, const ElFormula& alpha);

using WorldRelation = std::set<ElementPair>;

struct ElkInterpretation {
  std::vector<ElInterpretation> worlds;
  std::map<Agent, WorldRelation> relations;

  int num_worlds() const { return static_cast<int>(worlds.size()); }
  // Throws MalformedStructure unless every relation is an equivalence on the
  // worlds.
  void validate() const;

  friend bool operator==(const ElkInterpretation&, const ElkInterpretation&) = default;
};

struct PointedElk {
  ElkInterpretation structure;
  int point = 0;

  friend bool operator==(const PointedElk&, const PointedElk&) = default;
};

// R_sigma = R_a1 o ... o R_ak; the empty word and unknown agents give the
// identity.
WorldRelation compose_relation(const ElkInterpretation& structure, const AgentWord& sigma);

// Smallest equivalence relation on {0..n_worlds-1} containing `pairs`.
WorldRelation equivalence_closure(const WorldRelation& pairs, int n_worlds);

bool is_equivalence(const WorldRelation& r, int n_worlds);

bool check_elk(const PointedElk& model, const ElkFormula& phi);
bool check_elk(const PointedElk& model, const ConjunctiveElk& phi);

}  // namespace elkat
