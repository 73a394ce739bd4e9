// Propositional formulas over integer variables.

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace elkat {

class PropFormula {
 public:
  enum class Kind { kTrue, kFalse, kVar, kNot, kAnd, kOr, kImplies };

  static PropFormula True();
  static PropFormula False();
  static PropFormula Var(int index);
  static PropFormula Not(PropFormula child);
  static PropFormula And(PropFormula lhs, PropFormula rhs);
  static PropFormula Or(PropFormula lhs, PropFormula rhs);
  static PropFormula Implies(PropFormula lhs, PropFormula rhs);

  Kind kind() const;
  int var() const;
  const PropFormula& child() const;
  const PropFormula& lhs() const;
  const PropFormula& rhs() const;
  std::size_t size() const;

  // Largest variable index plus one.
  int num_vars() const;

  bool eval(const std::vector<bool>& assignment) const;
  bool eval_bits(std::uint64_t bits) const;
  // Three-valued evaluation; unassigned variables are nullopt.
  std::optional<bool> eval_partial(const std::vector<std::optional<bool>>& assignment) const;

  friend bool operator==(const PropFormula& a, const PropFormula& b);
  friend std::strong_ordering operator<=>(const PropFormula& a, const PropFormula& b);

 private:
  struct Node;
  explicit PropFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Names variables for printing and parsing ("p & r -> q").
class PropVocabulary {
 public:
  int intern(const std::string& name);
  int find(const std::string& name) const;  // -1 if absent
  const std::string& name(int index) const { return names_.at(index); }
  int size() const { return static_cast<int>(names_.size()); }

 private:
  std::vector<std::string> names_;
};

std::string to_string(const PropFormula& f, const PropVocabulary& vocab);

// Grammar: impl := disj [ "->" impl ] ; disj := conj { "|" conj } ;
// conj := lit { "&" lit } ; lit := "~" lit | "(" impl ")" | "true" | "false" | NAME.
// Names are interned into vocab.
PropFormula parse_prop(std::string_view text, PropVocabulary* vocab);

// Truth-table entailment; throws std::invalid_argument above max_vars.
inline constexpr int kMaxTruthTableVars = 24;
bool prop_entails(const std::vector<PropFormula>& theory, const PropFormula& x, int num_vars);
bool prop_satisfiable(const std::vector<PropFormula>& formulas, int num_vars);

}  // namespace elkat
