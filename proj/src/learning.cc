#include "elkat/learning.h"

#include <set>

namespace elkat {

Strategy parse_strategy(std::string_view name) {
  if (name == "smallest-first") return Strategy::kSmallestFirst;
  if (name == "largest-first") return Strategy::kLargestFirst;
  if (name == "adversarial") return Strategy::kAdversarial;
  throw std::invalid_argument("unknown oracle strategy '" + std::string(name) + "'");
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::kSmallestFirst:
      return "smallest-first";
    case Strategy::kLargestFirst:
      return "largest-first";
    case Strategy::kAdversarial:
      return "adversarial";
  }
  return "";
}

LearnerBudget learner_budget(const std::vector<ElAxiom>& ontology, int max_queries) {
  LearnerBudget b;
  Signature sig = signature(ontology);
  b.sigma_size = sig.concepts.size() + sig.roles.size() + sig.individuals.size();
  for (const auto& a : ontology) {
    std::size_t c = a.kind == ElAxiom::Kind::kInclusion ? std::max(a.lhs.size(), a.rhs.size()) : 1;
    b.largest_concept = std::max(b.largest_concept, c);
  }
  b.exponent = 2 * b.largest_concept * b.sigma_size + 2;
  b.max_queries = max_queries;
  return b;
}

bool is_named_form(const ElAxiom& a) {
  if (a.kind != ElAxiom::Kind::kInclusion) return false;
  return a.lhs.kind() == Concept::Kind::kName || a.rhs.kind() == Concept::Kind::kName;
}

namespace {

bool by_size_then_text(const Concept& a, const Concept& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return to_string(a) < to_string(b);
}

bool axiom_order(const ElAxiom& a, const ElAxiom& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return to_string(a) < to_string(b);
}

void subconcepts(const Concept& c, std::set<Concept>* out) {
  out->insert(c);
  if (c.kind() == Concept::Kind::kConj) {
    subconcepts(c.lhs(), out);
    subconcepts(c.rhs(), out);
  } else if (c.kind() == Concept::Kind::kExists) {
    subconcepts(c.filler(), out);
  }
}

void push_new(std::vector<ElAxiom>* v, std::set<ElAxiom>* seen, ElAxiom a) {
  if (seen->insert(a).second) v->push_back(std::move(a));
}

}  // namespace

std::vector<Concept> concepts_up_to(const Signature& sig, std::size_t max_size) {
  std::vector<std::vector<Concept>> by_size(max_size + 1);
  if (max_size >= 1) {
    by_size[1].push_back(Concept::Top());
    for (const auto& n : sig.concepts) by_size[1].push_back(Concept::Name(n));
  }
  for (std::size_t s = 2; s <= max_size; ++s) {
    for (const auto& r : sig.roles) {
      for (const auto& f : by_size[s - 1]) by_size[s].push_back(Concept::Exists(r, f));
    }
    for (std::size_t l = 1; l + 1 < s; ++l) {
      for (const auto& a : by_size[l]) {
        for (const auto& b : by_size[s - 1 - l]) {
          if (by_size_then_text(a, b)) by_size[s].push_back(Concept::Conj(a, b));
        }
      }
    }
    std::sort(by_size[s].begin(), by_size[s].end(), by_size_then_text);
  }
  std::vector<Concept> out;
  for (const auto& v : by_size) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<ElAxiom> sigma_assertions(const Signature& sig) {
  std::vector<ElAxiom> out;
  for (const auto& a : sig.individuals) {
    for (const auto& c : sig.concepts) out.push_back(ElAxiom::ConceptAssertion(c, a));
  }
  for (const auto& r : sig.roles) {
    for (const auto& a : sig.individuals) {
      for (const auto& b : sig.individuals) out.push_back(ElAxiom::RoleAssertion(r, a, b));
    }
  }
  return out;
}

std::vector<ElAxiom> el_pool(const std::vector<ElAxiom>& target, const Signature& sig, std::size_t max_size) {
  std::vector<ElAxiom> out;
  std::set<ElAxiom> seen;
  for (const auto& a : target) push_new(&out, &seen, a);
  for (const auto& a : sigma_assertions(sig)) push_new(&out, &seen, a);
  std::vector<Concept> all = concepts_up_to(sig, max_size);
  for (const auto& n : sig.concepts) {
    Concept name = Concept::Name(n);
    for (const auto& c : all) {
      if (c == name) continue;
      push_new(&out, &seen, ElAxiom::Inclusion(name, c));
      push_new(&out, &seen, ElAxiom::Inclusion(c, name));
    }
  }
  return out;
}

ProbePlan<ElAxiom> terminology_plan(const Signature& sig) {
  ProbePlan<ElAxiom> plan;
  plan.initial = sigma_assertions(sig);
  for (const auto& a : sig.concepts) {
    for (const auto& b : sig.concepts) {
      if (a != b) plan.initial.push_back(ElAxiom::Inclusion(Concept::Name(a), Concept::Name(b)));
    }
  }
  plan.refine = [names = sig.concepts](const ElAxiom& x) {
    std::vector<ElAxiom> out;
    if (x.kind != ElAxiom::Kind::kInclusion) return out;
    std::set<Concept> left;
    std::set<Concept> right;
    subconcepts(x.lhs, &left);
    subconcepts(x.rhs, &right);
    std::set<ElAxiom> seen;
    for (const auto& n : names) {
      Concept a = Concept::Name(n);
      for (const auto& d : right) {
        if (d != a) push_new(&out, &seen, ElAxiom::Inclusion(a, d));
      }
      for (const auto& c : left) {
        if (c != a) push_new(&out, &seen, ElAxiom::Inclusion(c, a));
      }
    }
    std::sort(out.begin(), out.end(), axiom_order);
    return out;
  };
  return plan;
}

LearnResult<ElAxiom> learn_terminology(const Signature& sig, EpistemicTeacher<ElAxiom>& t, const Agent& j) {
  return epistemic_learner(ElBackend{}, t, j, terminology_plan(sig));
}

Thm2Framework thm2_framework(int n) {
  if (n < 1 || n > 10) throw std::invalid_argument("n must lie in 1..10");
  Thm2Framework f;
  PropVocabulary& v = f.backend.vocab;
  PropFormula q = PropFormula::Var(v.intern("q"));
  PropFormula p = PropFormula::Var(v.intern("p"));
  std::vector<std::vector<PropFormula>> bit(2);
  for (int l = 0; l <= 1; ++l) {
    for (int j = 1; j <= n; ++j) bit[l].push_back(PropFormula::Var(v.intern("p" + std::to_string(l) + "_" + std::to_string(j))));
  }
  f.target = PropFormula::Implies(p, q);
  for (int pattern = 0; pattern < (1 << n); ++pattern) {
    PropFormula body = p;
    for (int j = 0; j < n; ++j) body = PropFormula::And(body, bit[(pattern >> (n - 1 - j)) & 1][j]);
    f.weak.push_back(PropFormula::Implies(body, q));
  }
  return f;
}

Thm2Counts run_thm2(int n, std::uint64_t seed) {
  Thm2Framework f = thm2_framework(n);
  std::vector<PropFormula> pool = f.weak;
  pool.push_back(f.target);

  Thm2Counts c;
  c.n = n;
  Oracle<PropBackend> ex_side(f.backend, {f.target}, pool, Strategy::kAdversarial, seed);
  ex_only_learner(f.backend, ex_side, "1");
  c.ex_transcript = ex_side.transcript();
  c.ex_queries = c.ex_transcript.count("ex");
  std::string target_text = f.backend.show(f.target);
  for (const auto& e : c.ex_transcript.entries) {
    if (e.answer != "finished" && e.answer != target_text) ++c.weak_examples;
  }

  Oracle<PropBackend> eq_side(f.backend, {f.target}, pool, Strategy::kAdversarial, seed);
  if (eq_side.eq({f.target})) throw std::logic_error("equivalence query on the target was refused");
  c.eq_transcript = eq_side.transcript();
  c.eq_queries = c.eq_transcript.count("eq");
  return c;
}

}  // namespace elkat
