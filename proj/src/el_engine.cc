#include "elkat/el_engine.h"

#include <algorithm>

namespace elkat {

std::vector<CBoxAxiom> tau(const ElLiteral& lit, FreshNames* fresh) {
  std::optional<FreshNames> local;
  if (!fresh) {
    local.emplace("__f", signature(lit).individuals);
    fresh = &*local;
  }
  const ElAxiom& a = lit.axiom;
  switch (a.kind) {
    case ElAxiom::Kind::kConceptAssertion: {
      Concept nominal = Concept::Nominal(a.first);
      Concept name = Concept::Name(a.symbol);
      if (lit.positive) return {{nominal, name}};
      return {{Concept::Conj(nominal, name), Concept::Bottom()}};
    }
    case ElAxiom::Kind::kRoleAssertion: {
      Concept from = Concept::Nominal(a.first);
      Concept edge = Concept::Exists(a.symbol, Concept::Nominal(a.second));
      if (lit.positive) return {{from, edge}};
      return {{Concept::Conj(from, edge), Concept::Bottom()}};
    }
    case ElAxiom::Kind::kInclusion: {
      if (lit.positive) return {{a.lhs, a.rhs}};
      Concept f = Concept::Nominal(fresh->next());
      return {{f, a.lhs}, {Concept::Conj(f, a.rhs), Concept::Bottom()}};
    }
  }
  return {};
}

std::vector<CBoxAxiom> tau_set(const std::vector<ElLiteral>& literals) {
  FreshNames fresh("__f", signature(literals).individuals);
  std::vector<CBoxAxiom> out;
  std::set<ElLiteral> seen;
  for (const auto& l : literals) {
    if (!seen.insert(l).second) continue;
    for (auto& g : tau(l, &fresh)) out.push_back(std::move(g));
  }
  return out;
}

bool literals_sat(const std::vector<ElLiteral>& literals) {
  if (literals.empty()) return true;
  return elpp_consistent(normalize(tau_set(literals)));
}

bool entails(const std::vector<ElAxiom>& ontology, const ElAxiom& axiom) {
  std::vector<ElLiteral> lits;
  lits.reserve(ontology.size() + 1);
  for (const auto& a : ontology) lits.push_back({a, true});
  lits.push_back({axiom, false});
  return !literals_sat(lits);
}

bool entails_all(const std::vector<ElAxiom>& ontology, const std::vector<ElAxiom>& axioms) {
  return std::all_of(axioms.begin(), axioms.end(), [&](const ElAxiom& a) { return entails(ontology, a); });
}

bool equivalent(const std::vector<ElAxiom>& a, const std::vector<ElAxiom>& b) {
  return entails_all(a, b) && entails_all(b, a);
}

int PropAbstraction::variable_of(const ElAxiom& a) const {
  auto it = std::find(axioms.begin(), axioms.end(), a);
  return it == axioms.end() ? -1 : static_cast<int>(it - axioms.begin());
}

namespace {

PropFormula skeleton_of(const ElFormula& f, const PropAbstraction& abs) {
  switch (f.kind()) {
    case ElFormula::Kind::kLit: return PropFormula::Var(abs.variable_of(f.axiom()));
    case ElFormula::Kind::kNot: return PropFormula::Not(skeleton_of(f.child(), abs));
    case ElFormula::Kind::kAnd: return PropFormula::And(skeleton_of(f.lhs(), abs), skeleton_of(f.rhs(), abs));
  }
  return PropFormula::True();
}

}  // namespace

PropAbstraction prop_abstraction(const ElFormula& alpha) {
  PropAbstraction abs;
  abs.axioms = axioms_of(alpha);
  abs.skeleton = skeleton_of(alpha, abs);
  return abs;
}

std::vector<ElLiteral> induced_literals(const PropAbstraction& abs, const VariableSet& m) {
  std::vector<ElLiteral> out;
  for (int i = 0; i < abs.num_vars(); ++i) out.push_back({abs.axioms[i], m.count(i) > 0});
  return out;
}

bool m_consistent(const VariableSet& m, const ElFormula& alpha) {
  return literals_sat(induced_literals(prop_abstraction(alpha), m));
}

namespace {

bool search(const PropAbstraction& abs, std::vector<std::optional<bool>>* assign, std::vector<ElLiteral>* lits,
            int i) {
  auto v = abs.skeleton.eval_partial(*assign);
  if (v == false) return false;
  if (i == abs.num_vars()) return v == true;
  for (bool value : {true, false}) {
    (*assign)[i] = value;
    lits->push_back({abs.axioms[i], value});
    if (literals_sat(*lits) && search(abs, assign, lits, i + 1)) return true;
    lits->pop_back();
  }
  (*assign)[i] = std::nullopt;
  return false;
}

}  // namespace

std::optional<VariableSet> el_formula_model(const ElFormula& alpha) {
  PropAbstraction abs = prop_abstraction(alpha);
  std::vector<std::optional<bool>> assign(abs.num_vars());
  std::vector<ElLiteral> lits;
  if (!search(abs, &assign, &lits, 0)) return std::nullopt;
  VariableSet m;
  for (int i = 0; i < abs.num_vars(); ++i) {
    if (*assign[i]) m.insert(i);
  }
  return m;
}

bool el_formula_sat(const ElFormula& alpha) { return el_formula_model(alpha).has_value(); }

std::optional<ElInterpretation> el_formula_witness(const ElFormula& alpha, const Signature& extra) {
  auto m = el_formula_model(alpha);
  if (!m) return std::nullopt;
  return witness_el_model(alpha, *m, extra);
}

CanonicalModel canonical_model(const std::vector<ElAxiom>& ontology, const Signature& extra) {
  Signature sig = signature(ontology);
  sig.merge(extra);
  NormalizedOntology norm = normalize(ontology);

  std::set<std::string> names = sig.concepts;
  std::set<std::string> roles = sig.roles;
  for (const auto& ax : norm.axioms) {
    for (const Concept* c : {&ax.a, &ax.b, &ax.rhs}) {
      if (c->kind() == Concept::Kind::kName) names.insert(c->name());
    }
  }

  std::set<std::string> used = names;
  used.insert(roles.begin(), roles.end());
  used.insert(sig.individuals.begin(), sig.individuals.end());
  FreshNames helper("__Q", used);
  std::vector<Concept> fillers{Concept::Top()};
  for (const auto& n : names) fillers.push_back(Concept::Name(n));
  // (role, filler index) -> helper name standing for some role . filler
  std::map<std::pair<std::string, std::size_t>, Concept> exists_helper;
  for (const auto& r : roles) {
    for (std::size_t i = 0; i < fillers.size(); ++i) {
      Concept q = Concept::Name(helper.next());
      norm.axioms.insert(NormalAxiom::ExistsLeft(r, fillers[i], q));
      exists_helper[{r, i}] = q;
    }
  }

  std::vector<Concept> basics = fillers;
  for (const auto& a : sig.individuals) basics.push_back(Concept::Nominal(a));
  CompletionState st = saturate(norm, basics);

  CanonicalModel out;
  ElInterpretation& I = out.interpretation;
  // (concept whose c_ element or individual this is, element)
  std::vector<std::pair<Concept, Element>> elems;
  Element next = 0;
  for (const auto& a : sig.individuals) {
    I.individuals[a] = next;
    elems.push_back({Concept::Nominal(a), next++});
  }
  out.top = next;
  elems.push_back({Concept::Top(), next++});
  for (const auto& n : names) {
    out.elements[n] = next;
    elems.push_back({Concept::Name(n), next++});
  }
  I.domain_size = next;

  auto element_of_filler = [&](std::size_t i) { return i == 0 ? out.top : out.elements.at(fillers[i].name()); };

  for (const auto& a : sig.concepts) {
    auto& ext = I.concepts[a];
    for (const auto& [c, e] : elems) {
      if (st.has(c, Concept::Name(a))) ext.insert(e);
    }
  }
  for (const auto& r : sig.roles) {
    auto& ext = I.roles[r];
    for (const auto& ax : ontology) {
      if (ax.kind == ElAxiom::Kind::kRoleAssertion && ax.symbol == r) {
        ext.insert({I.individuals.at(ax.first), I.individuals.at(ax.second)});
      }
    }
    for (std::size_t i = 0; i < fillers.size(); ++i) {
      const Concept& q = exists_helper.at({r, i});
      for (const auto& [c, e] : elems) {
        if (st.has(c, q)) ext.insert({e, element_of_filler(i)});
      }
    }
  }
  return out;
}

ConceptModel canonical_model_of_concept(const Concept& c, const std::vector<ElAxiom>& ontology,
                                        const Signature& extra) {
  Signature sig = signature(ontology);
  sig.merge(extra);
  sig.merge(signature(c));
  std::set<std::string> used = sig.concepts;
  used.insert(sig.roles.begin(), sig.roles.end());
  used.insert(sig.individuals.begin(), sig.individuals.end());
  std::string a_c = FreshNames("__C", used).next();
  used.insert(a_c);
  std::string root = FreshNames("__c", used).next();

  std::vector<ElAxiom> extended = ontology;
  extended.push_back(ElAxiom::Inclusion(Concept::Name(a_c), c));
  extended.push_back(ElAxiom::Inclusion(c, Concept::Name(a_c)));
  extended.push_back(ElAxiom::ConceptAssertion(a_c, root));

  CanonicalModel cm = canonical_model(extended, extra);
  ConceptModel out;
  out.interpretation = std::move(cm.interpretation);
  out.root = out.interpretation.individuals.at(root);
  out.interpretation.individuals.erase(root);
  out.interpretation.concepts.erase(a_c);
  return out;
}

ElInterpretation witness_el_model(const ElFormula& alpha, const VariableSet& m, const Signature& extra) {
  PropAbstraction abs = prop_abstraction(alpha);
  for (int v : m) {
    if (v < 0 || v >= abs.num_vars()) throw InvalidWitnessInput("variable outside the abstraction");
  }
  std::vector<bool> row(abs.num_vars());
  for (int i = 0; i < abs.num_vars(); ++i) row[i] = m.count(i) > 0;
  if (!abs.skeleton.eval(row)) throw InvalidWitnessInput("not a model of the propositional abstraction");
  if (!literals_sat(induced_literals(abs, m))) throw InvalidWitnessInput("propositional model is not M-consistent");

  std::vector<ElAxiom> positives;
  for (int v : m) positives.push_back(abs.axioms[v]);
  Signature sig = signature(alpha);
  sig.merge(extra);
  ElInterpretation out = canonical_model(positives, sig).interpretation;
  for (int i = 0; i < abs.num_vars(); ++i) {
    const ElAxiom& a = abs.axioms[i];
    if (m.count(i) || a.kind != ElAxiom::Kind::kInclusion) continue;
    out = disjoint_union(out, canonical_model_of_concept(a.lhs, positives).interpretation);
  }
  return out;
}

ElInterpretation literals_witness(const std::vector<ElLiteral>& literals, const Signature& extra) {
  if (literals.empty()) return canonical_model({}, extra).interpretation;
  ElFormula f = ElFormula::FromLiterals(literals);
  PropAbstraction abs = prop_abstraction(f);
  VariableSet m;
  for (const auto& l : literals) {
    if (l.positive) m.insert(abs.variable_of(l.axiom));
  }
  return witness_el_model(f, m, extra);
}

}  // namespace elkat
