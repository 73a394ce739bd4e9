// Abstract syntax for EL, EL formulas, ELK formulas and the conjunctive ELK
// fragment. All syntax trees are immutable values with structural equality
// and a total order, so they can be used as keys of ordered containers.

#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace elkat {

// Raised when input falls outside the fragment an operation accepts.
class FragmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Concept {
 public:
  enum class Kind { kTop, kBottom, kName, kNominal, kConj, kExists };

  Concept();  // Top

  static Concept Top();
  static Concept Bottom();
  static Concept Name(std::string name);
  static Concept Nominal(std::string individual);
  static Concept Conj(Concept lhs, Concept rhs);
  static Concept Exists(std::string role, Concept filler);

  Kind kind() const;
  // Concept name, nominal individual, or role of an existential.
  const std::string& name() const;
  const Concept& lhs() const;
  const Concept& rhs() const;
  const Concept& filler() const;
  std::size_t size() const;

  bool is_basic() const {
    auto k = kind();
    return k == Kind::kTop || k == Kind::kBottom || k == Kind::kName || k == Kind::kNominal;
  }

  friend bool operator==(const Concept& a, const Concept& b);
  friend std::strong_ordering operator<=>(const Concept& a, const Concept& b);

 private:
  struct Node;
  explicit Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct ElAxiom {
  enum class Kind { kInclusion, kConceptAssertion, kRoleAssertion };

  Kind kind = Kind::kInclusion;
  Concept lhs;             // inclusion
  Concept rhs;             // inclusion
  std::string symbol;      // concept or role name of an assertion
  std::string first;       // individual
  std::string second;      // second individual of a role assertion

  static ElAxiom Inclusion(Concept lhs, Concept rhs);
  static ElAxiom ConceptAssertion(std::string concept_name, std::string individual);
  static ElAxiom RoleAssertion(std::string role, std::string from, std::string to);

  std::size_t size() const;

  friend bool operator==(const ElAxiom&, const ElAxiom&) = default;
  friend std::strong_ordering operator<=>(const ElAxiom&, const ElAxiom&) = default;
};

struct ElLiteral {
  ElAxiom axiom;
  bool positive = true;

  ElLiteral negated() const { return {axiom, !positive}; }

  friend bool operator==(const ElLiteral&, const ElLiteral&) = default;
  friend std::strong_ordering operator<=>(const ElLiteral&, const ElLiteral&) = default;
};

// Boolean combination of EL axioms.
class ElFormula {
 public:
  enum class Kind { kLit, kNot, kAnd };

  static ElFormula Lit(ElAxiom axiom);
  static ElFormula Not(ElFormula child);
  static ElFormula And(ElFormula lhs, ElFormula rhs);
  // Conjunction of literals, left-nested. Requires a non-empty list.
  static ElFormula FromLiterals(const std::vector<ElLiteral>& literals);

  Kind kind() const;
  const ElAxiom& axiom() const;
  const ElFormula& child() const;
  const ElFormula& lhs() const;
  const ElFormula& rhs() const;

  friend bool operator==(const ElFormula& a, const ElFormula& b);
  friend std::strong_ordering operator<=>(const ElFormula& a, const ElFormula& b);

 private:
  struct Node;
  explicit ElFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using Agent = std::string;
using AgentWord = std::vector<Agent>;

// ELK formula. An axiom node carries a (possibly empty) K-prefix over an EL
// formula body; negation between modalities is unrepresentable.
class ElkFormula {
 public:
  enum class Kind { kAx, kNot, kAnd };

  // With an empty prefix a compound body is spread into ELK-level Not/And,
  // so unprefixed axiom nodes always carry a single literal.
  static ElkFormula Ax(AgentWord prefix, ElFormula body);
  static ElkFormula Plain(ElAxiom axiom) { return Ax({}, ElFormula::Lit(std::move(axiom))); }
  static ElkFormula Not(ElkFormula child);
  static ElkFormula And(ElkFormula lhs, ElkFormula rhs);

  Kind kind() const;
  const AgentWord& prefix() const;
  const ElFormula& body() const;
  const ElkFormula& child() const;
  const ElkFormula& lhs() const;
  const ElkFormula& rhs() const;

  friend bool operator==(const ElkFormula& a, const ElkFormula& b);
  friend std::strong_ordering operator<=>(const ElkFormula& a, const ElkFormula& b);

 private:
  struct Node;
  explicit ElkFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// K_sigma applied to a conjunction of EL literals. An empty body is Top.
struct ModalConjunct {
  AgentWord sigma;
  std::vector<ElLiteral> body;

  friend bool operator==(const ModalConjunct&, const ModalConjunct&) = default;
  friend auto operator<=>(const ModalConjunct&, const ModalConjunct&) = default;
};

// omega0 && K_s1 w1 && ... && !K_sm wm
struct ConjunctiveElk {
  std::vector<ElLiteral> omega0;
  std::vector<ModalConjunct> positives;
  std::vector<ModalConjunct> negatives;

  friend bool operator==(const ConjunctiveElk&, const ConjunctiveElk&) = default;
};

// Normalizes a formula of the conjunctive fragment. Throws FragmentError
// naming the offending subformula otherwise.
ConjunctiveElk to_conjunctive(const ElkFormula& phi);

// Inverse of to_conjunctive: omega0 literals, then positives, then negatives,
// joined by a left-nested conjunction. Requires at least one conjunct.
ElkFormula render(const ConjunctiveElk& phi);

struct Signature {
  std::set<std::string> concepts;
  std::set<std::string> roles;
  std::set<std::string> individuals;
  std::set<std::string> agents;

  void merge(const Signature& other);
  bool empty() const {
    return concepts.empty() && roles.empty() && individuals.empty() && agents.empty();
  }
  bool includes(const Signature& other) const;

  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature(const Concept& c);
Signature signature(const ElAxiom& a);
Signature signature(const ElLiteral& l);
Signature signature(const ElFormula& f);
Signature signature(const ElkFormula& f);
Signature signature(const ConjunctiveElk& f);
Signature signature(const std::vector<ElAxiom>& axioms);
Signature signature(const std::vector<ElLiteral>& literals);

// Canonical text in the concrete grammar; parse(to_string(x)) == x.
std::string to_string(const Concept& c);
std::string to_string(const ElAxiom& a);
std::string to_string(const ElLiteral& l);
std::string to_string(const ElFormula& f);
std::string to_string(const ElkFormula& f);
std::string to_string(const AgentWord& w);
std::string to_string(const ConjunctiveElk& f);

std::ostream& operator<<(std::ostream& os, const Concept& c);
std::ostream& operator<<(std::ostream& os, const ElAxiom& a);
std::ostream& operator<<(std::ostream& os, const ElLiteral& l);
std::ostream& operator<<(std::ostream& os, const ElFormula& f);
std::ostream& operator<<(std::ostream& os, const ElkFormula& f);

// Literal view of an EL formula that is a conjunction of literals; throws
// FragmentError otherwise.
std::vector<ElLiteral> literal_conjunction(const ElFormula& f);
bool is_literal_conjunction(const ElFormula& f);

// Distinct axioms in first-occurrence order.
std::vector<ElAxiom> axioms_of(const ElFormula& f);

}  // namespace elkat
