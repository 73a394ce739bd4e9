// EL++ CBoxes: normalization into the four normal forms and consistency by
// completion-rule saturation.

#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "elkat/syntax.h"

namespace elkat {

// General concept inclusion over concepts that may contain nominals and Bottom.
struct CBoxAxiom {
  Concept lhs;
  Concept rhs;

  friend bool operator==(const CBoxAxiom&, const CBoxAxiom&) = default;
  friend std::strong_ordering operator<=>(const CBoxAxiom&, const CBoxAxiom&) = default;
};

std::string to_string(const CBoxAxiom& a);

// A1 <= B, A1 & A2 <= B, A1 <= some r . B, some r . A1 <= B, all over basic
// concepts (names, Top, Bottom, nominals).
struct NormalAxiom {
  enum class Kind { kSub, kConj, kExistsRight, kExistsLeft };

  Kind kind = Kind::kSub;
  Concept a;
  Concept b;  // second conjunct of kConj, unused otherwise
  std::string role;
  Concept rhs;

  static NormalAxiom Sub(Concept a, Concept rhs);
  static NormalAxiom Conj(Concept a, Concept b, Concept rhs);
  static NormalAxiom ExistsRight(Concept a, std::string role, Concept filler);
  static NormalAxiom ExistsLeft(std::string role, Concept filler, Concept rhs);

  CBoxAxiom as_gci() const;

  friend bool operator==(const NormalAxiom&, const NormalAxiom&) = default;
  friend std::strong_ordering operator<=>(const NormalAxiom&, const NormalAxiom&) = default;
};

// Hands out prefix1, prefix2, ... skipping names already in use.
class FreshNames {
 public:
  FreshNames(std::string prefix, std::set<std::string> used) : prefix_(std::move(prefix)), used_(std::move(used)) {}
  std::string next();

 private:
  std::string prefix_;
  std::set<std::string> used_;
  int counter_ = 0;
};

struct NormalizedOntology {
  std::set<NormalAxiom> axioms;
  // Fresh concept name -> printed concept it abbreviates.
  std::map<std::string, std::string> fresh_map;
};

// Fresh names are __N1, __N2, ... in left-to-right traversal order.
NormalizedOntology normalize(const std::vector<CBoxAxiom>& cbox);
NormalizedOntology normalize(const std::vector<ElAxiom>& ontology);

struct CompletionState {
  std::vector<Concept> basics;  // index 0 is Top, 1 is Bottom
  std::map<Concept, int> index;
  std::vector<std::vector<bool>> subsumers;  // S[c][d]: d in S(c)
  std::map<std::string, std::set<std::pair<int, int>>> relations;
  bool clash = false;

  int index_of(const Concept& c) const;  // -1 if absent
  // d in S(c); false when either concept is not a basic of the state.
  bool has(const Concept& c, const Concept& d) const;
  std::vector<Concept> subsumers_of(const Concept& c) const;

  friend bool operator==(const CompletionState&, const CompletionState&) = default;
};

// Initial state over the basics of `o` plus `extra_basics`.
CompletionState initial_state(const NormalizedOntology& o, const std::vector<Concept>& extra_basics = {});
// One round of every rule; returns whether anything changed.
bool apply_rules(const NormalizedOntology& o, CompletionState* state);
CompletionState saturate(const NormalizedOntology& o, const std::vector<Concept>& extra_basics = {});

bool elpp_consistent(const NormalizedOntology& o);

}  // namespace elkat
