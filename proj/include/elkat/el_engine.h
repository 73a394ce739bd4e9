// EL reasoning: the tau reduction of EL literals to EL++, satisfiability and
// entailment, propositional abstraction of EL formulas, and canonical / witness
// model construction.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "elkat/completion.h"
#include "elkat/interpretation.h"
#include "elkat/prop.h"
#include "elkat/syntax.h"

namespace elkat {

class InvalidWitnessInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fresh individuals for negated inclusions are __f1, __f2, ...; pass a shared
// generator to keep them distinct across literals.
std::vector<CBoxAxiom> tau(const ElLiteral& lit, FreshNames* fresh = nullptr);
std::vector<CBoxAxiom> tau_set(const std::vector<ElLiteral>& literals);

// The empty set is satisfiable.
bool literals_sat(const std::vector<ElLiteral>& literals);
bool entails(const std::vector<ElAxiom>& ontology, const ElAxiom& axiom);
bool entails_all(const std::vector<ElAxiom>& ontology, const std::vector<ElAxiom>& axioms);
bool equivalent(const std::vector<ElAxiom>& a, const std::vector<ElAxiom>& b);

struct PropAbstraction {
  std::vector<ElAxiom> axioms;  // variable i stands for axioms[i]
  PropFormula skeleton = PropFormula::True();

  int variable_of(const ElAxiom& a) const;  // -1 if absent
  int num_vars() const { return static_cast<int>(axioms.size()); }
};

PropAbstraction prop_abstraction(const ElFormula& alpha);

using VariableSet = std::set<int>;

// Literals induced by M: axioms of M positively, all others negated.
std::vector<ElLiteral> induced_literals(const PropAbstraction& abs, const VariableSet& m);
bool m_consistent(const VariableSet& m, const ElFormula& alpha);

// First M-consistent propositional model in the search order, if any.
std::optional<VariableSet> el_formula_model(const ElFormula& alpha);
bool el_formula_sat(const ElFormula& alpha);
// A satisfying interpretation, built by witness_el_model.
std::optional<ElInterpretation> el_formula_witness(const ElFormula& alpha, const Signature& extra = {});

struct CanonicalModel {
  ElInterpretation interpretation;
  Element top = 0;                          // c_Top
  std::map<std::string, Element> elements;  // c_A per concept name A
};

// Domain: individuals of O and `extra` (sorted), c_Top, then c_A for every
// concept name of the normalized ontology. Helper names introduced internally
// never appear in the result.
CanonicalModel canonical_model(const std::vector<ElAxiom>& ontology, const Signature& extra = {});

struct ConceptModel {
  ElInterpretation interpretation;
  Element root = 0;
};

ConceptModel canonical_model_of_concept(const Concept& c, const std::vector<ElAxiom>& ontology,
                                        const Signature& extra = {});

// Individuals and names of `extra` are mapped as well.
ElInterpretation witness_el_model(const ElFormula& alpha, const VariableSet& m, const Signature& extra = {});

// Witness for a satisfiable literal set; throws InvalidWitnessInput otherwise.
ElInterpretation literals_witness(const std::vector<ElLiteral>& literals, const Signature& extra = {});

}  // namespace elkat
