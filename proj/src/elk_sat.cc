#include "elkat/elk_sat.h"

#include <algorithm>
#include <map>

#include "elkat/el_engine.h"
#include "elkat/prop.h"

namespace elkat {

AgentWord flatten(const AgentWord& sigma) {
  AgentWord out;
  for (const auto& a : sigma) {
    if (out.empty() || out.back() != a) out.push_back(a);
  }
  return out;
}

namespace {

template <typename T>
void push_unique(std::vector<T>* v, const T& x) {
  if (std::find(v->begin(), v->end(), x) == v->end()) v->push_back(x);
}

std::vector<ElLiteral> dedupe(const std::vector<ElLiteral>& lits) {
  std::vector<ElLiteral> out;
  for (const auto& l : lits) push_unique(&out, l);
  return out;
}

}  // namespace

FlatConjunctiveElk flatten(const ConjunctiveElk& phi) {
  FlatConjunctiveElk out;
  ConjunctiveElk& f = out.phi;
  f.omega0 = dedupe(phi.omega0);
  for (const auto& p : phi.positives) {
    AgentWord sigma = flatten(p.sigma);
    if (sigma.empty()) {
      for (const auto& l : p.body) push_unique(&f.omega0, l);
    } else {
      push_unique(&f.positives, ModalConjunct{sigma, dedupe(p.body)});
    }
  }
  for (const auto& n : phi.negatives) {
    AgentWord sigma = flatten(n.sigma);
    if (sigma.empty()) {
      if (n.body.size() != 1) throw FragmentError("negated empty-word conjunct must have exactly one literal");
      push_unique(&f.omega0, n.body[0].negated());
    } else {
      push_unique(&f.negatives, ModalConjunct{sigma, dedupe(n.body)});
    }
  }
  return out;
}

bool is_subword(const AgentWord& shorter, const AgentWord& longer) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < longer.size() && i < shorter.size(); ++j) {
    if (shorter[i] == longer[j]) ++i;
  }
  return i == shorter.size();
}

namespace {

// What one world of the witness has to satisfy: a conjunction of literal
// lists and EL formulas.
struct WorldGoal {
  std::vector<ElLiteral> literals;
  std::vector<ElFormula> formulas;
};

ElInterpretation realize(const WorldGoal& goal, const Signature& sig) {
  if (goal.formulas.empty()) return literals_witness(goal.literals, sig);
  std::vector<ElFormula> parts = goal.formulas;
  if (!goal.literals.empty()) parts.push_back(ElFormula::FromLiterals(goal.literals));
  ElFormula f = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) f = ElFormula::And(f, parts[i]);
  auto w = el_formula_witness(f, sig);
  if (!w) throw NotSatisfiable("world requirement is not EL satisfiable: " + to_string(f));
  return *w;
}

struct ModalGoal {
  AgentWord sigma;
  WorldGoal body;
};

// J0 satisfies world0 and every positive body; each negative conjunct
// a1..ak gets a chain J1..Jk whose i-th world satisfies the bodies of all
// positives having a1..ai as a subword, the last one also the negative goal.
PointedElk build_witness(const Signature& sig, WorldGoal world0, const std::vector<ModalGoal>& positives,
                         const std::vector<ModalGoal>& negatives) {
  auto add_body = [](WorldGoal* g, const WorldGoal& b) {
    for (const auto& l : b.literals) push_unique(&g->literals, l);
    for (const auto& f : b.formulas) g->formulas.push_back(f);
  };
  for (const auto& p : positives) add_body(&world0, p.body);

  PointedElk model;
  auto& worlds = model.structure.worlds;
  worlds.push_back(realize(world0, sig));
  std::map<Agent, WorldRelation> edges;
  for (const auto& n : negatives) {
    int prev = 0;
    for (std::size_t i = 1; i <= n.sigma.size(); ++i) {
      AgentWord prefix(n.sigma.begin(), n.sigma.begin() + static_cast<long>(i));
      WorldGoal goal;
      for (const auto& p : positives) {
        if (is_subword(prefix, p.sigma)) add_body(&goal, p.body);
      }
      if (i == n.sigma.size()) add_body(&goal, n.body);
      int cur = static_cast<int>(worlds.size());
      worlds.push_back(realize(goal, sig));
      edges[n.sigma[i - 1]].insert({prev, cur});
      prev = cur;
    }
  }
  for (const auto& a : sig.agents) {
    model.structure.relations[a] = equivalence_closure(edges[a], static_cast<int>(worlds.size()));
  }
  model.point = 0;
  return model;
}

std::vector<ElLiteral> pooled(const ConjunctiveElk& f, const AgentWord& sigma) {
  std::vector<ElLiteral> psi;
  for (const auto& p : f.positives) {
    if (!is_subword(sigma, p.sigma)) continue;
    for (const auto& l : p.body) push_unique(&psi, l);
  }
  return psi;
}

// First literal whose negation is consistent with psi.
std::optional<ElLiteral> escape_literal(const std::vector<ElLiteral>& psi, const std::vector<ElLiteral>& body) {
  for (const auto& beta : body) {
    std::vector<ElLiteral> member = psi;
    member.push_back(beta.negated());
    if (literals_sat(member)) return beta;
  }
  return std::nullopt;
}

}  // namespace

SatVerdict conjunctive_sat(const ConjunctiveElk& phi, bool with_witness) {
  FlatConjunctiveElk flat = flatten(phi);
  const ConjunctiveElk& f = flat.phi;
  SatVerdict v;

  std::vector<ElLiteral> all = f.omega0;
  for (const auto& p : f.positives) {
    for (const auto& l : p.body) push_unique(&all, l);
  }
  if (!literals_sat(all)) {
    v.failing_check = FailingCheck{1, {}, all, {}};
    return v;
  }
  for (const auto& n : f.negatives) {
    std::vector<ElLiteral> psi = pooled(f, n.sigma);
    if (!escape_literal(psi, n.body)) {
      v.failing_check = FailingCheck{2, n.sigma, n.body, psi};
      return v;
    }
  }
  v.satisfiable = true;
  if (with_witness) v.witness = witness_model(flat);
  return v;
}

PointedElk witness_model(const FlatConjunctiveElk& flat) {
  const ConjunctiveElk& f = flat.phi;
  std::vector<ModalGoal> positives;
  for (const auto& p : f.positives) positives.push_back({p.sigma, {p.body, {}}});
  std::vector<ModalGoal> negatives;
  for (const auto& n : f.negatives) {
    auto beta = escape_literal(pooled(f, n.sigma), n.body);
    if (!beta) throw NotSatisfiable("negated conjunct " + to_string(n.sigma) + " cannot be escaped");
    negatives.push_back({n.sigma, {{beta->negated()}, {}}});
  }
  return build_witness(signature(f), {f.omega0, {}}, positives, negatives);
}

namespace {

struct ElkAtom {
  AgentWord sigma;  // flattened
  ElFormula body;
};

class FullSearch {
 public:
  explicit FullSearch(const ElkFormula& phi) : sig_(signature(phi)) { skeleton_ = abstract(phi); }

  std::optional<std::vector<bool>> run() {
    std::vector<std::optional<bool>> assign(atoms_.size());
    if (!search(&assign, 0)) return std::nullopt;
    std::vector<bool> out;
    for (const auto& a : assign) out.push_back(*a);
    return out;
  }

  PointedElk witness(const std::vector<bool>& assign) {
    WorldGoal world0;
    std::vector<ModalGoal> positives;
    std::vector<ModalGoal> negatives;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      const ElkAtom& a = atoms_[i];
      if (a.sigma.empty()) {
        world0.formulas.push_back(assign[i] ? a.body : ElFormula::Not(a.body));
      } else if (assign[i]) {
        positives.push_back({a.sigma, {{}, {a.body}}});
      } else {
        negatives.push_back({a.sigma, {{}, {ElFormula::Not(a.body)}}});
      }
    }
    return build_witness(sig_, world0, positives, negatives);
  }

 private:
  PropFormula abstract(const ElkFormula& f) {
    switch (f.kind()) {
      case ElkFormula::Kind::kAx: {
        AgentWord sigma = flatten(f.prefix());
        for (std::size_t i = 0; i < atoms_.size(); ++i) {
          if (atoms_[i].sigma == sigma && atoms_[i].body == f.body()) return PropFormula::Var(static_cast<int>(i));
        }
        atoms_.push_back({sigma, f.body()});
        return PropFormula::Var(static_cast<int>(atoms_.size()) - 1);
      }
      case ElkFormula::Kind::kNot:
        return PropFormula::Not(abstract(f.child()));
      case ElkFormula::Kind::kAnd:
        return PropFormula::And(abstract(f.lhs()), abstract(f.rhs()));
    }
    return PropFormula::True();
  }

  bool sat(const std::vector<ElFormula>& parts) {
    if (parts.empty()) return true;
    ElFormula f = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) f = ElFormula::And(f, parts[i]);
    auto [it, inserted] = cache_.try_emplace(f, false);
    if (inserted) it->second = el_formula_sat(f);
    return it->second;
  }

  // Condition 1 over the assigned atoms; once everything is assigned, also
  // condition 2 for every negated modal atom.
  bool consistent(const std::vector<std::optional<bool>>& assign, bool complete) {
    std::vector<ElFormula> world0;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (!assign[i]) continue;
      if (*assign[i]) {
        world0.push_back(atoms_[i].body);
      } else if (atoms_[i].sigma.empty()) {
        world0.push_back(ElFormula::Not(atoms_[i].body));
      }
    }
    if (!sat(world0)) return false;
    if (!complete) return true;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (*assign[i] || atoms_[i].sigma.empty()) continue;
      std::vector<ElFormula> goal;
      for (std::size_t j = 0; j < atoms_.size(); ++j) {
        if (*assign[j] && !atoms_[j].sigma.empty() && is_subword(atoms_[i].sigma, atoms_[j].sigma)) {
          goal.push_back(atoms_[j].body);
        }
      }
      goal.push_back(ElFormula::Not(atoms_[i].body));
      if (!sat(goal)) return false;
    }
    return true;
  }

  bool search(std::vector<std::optional<bool>>* assign, std::size_t i) {
    auto v = skeleton_.eval_partial(*assign);
    if (v == false) return false;
    if (i == atoms_.size()) return v == true && consistent(*assign, true);
    for (bool value : {true, false}) {
      (*assign)[i] = value;
      if (consistent(*assign, false) && search(assign, i + 1)) return true;
    }
    (*assign)[i] = std::nullopt;
    return false;
  }

  Signature sig_;
  std::vector<ElkAtom> atoms_;
  PropFormula skeleton_ = PropFormula::True();
  std::map<ElFormula, bool> cache_;
};

}  // namespace

SatVerdict elk_sat(const ElkFormula& phi, bool with_witness) {
  FullSearch search(phi);
  SatVerdict v;
  auto assign = search.run();
  if (!assign) return v;
  v.satisfiable = true;
  if (with_witness) v.witness = search.witness(*assign);
  return v;
}

}  // namespace elkat
