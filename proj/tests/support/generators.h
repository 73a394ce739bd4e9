// Random syntax and structures for property and differential tests.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "elkat/interpretation.h"
#include "elkat/syntax.h"

namespace elkat::testing {

using Rng = std::mt19937_64;

struct Vocabulary {
  std::vector<std::string> concepts{"A", "B"};
  std::vector<std::string> roles{"r"};
  std::vector<std::string> individuals{"a"};
  std::vector<std::string> agents{"1", "2"};
};

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[uniform(rng, 0, static_cast<int>(v.size()) - 1)];
}

// Concept with at most `size` nodes.
inline Concept random_concept(Rng& rng, const Vocabulary& voc, int size) {
  if (size <= 1 || (voc.roles.empty() && size < 3)) {
    if (coin(rng, 0.15)) return Concept::Top();
    return Concept::Name(pick(rng, voc.concepts));
  }
  int choice = uniform(rng, 0, 3);
  if (choice == 0) return random_concept(rng, voc, 1);
  if (choice == 1 && !voc.roles.empty()) return Concept::Exists(pick(rng, voc.roles), random_concept(rng, voc, size - 1));
  if (size < 3) return random_concept(rng, voc, 1);
  int left = uniform(rng, 1, size - 2);
  return Concept::Conj(random_concept(rng, voc, left), random_concept(rng, voc, size - 1 - left));
}

inline ElAxiom random_axiom(Rng& rng, const Vocabulary& voc, int concept_size = 3) {
  int kind = uniform(rng, 0, 5);
  if (kind == 0 && !voc.individuals.empty()) {
    return ElAxiom::ConceptAssertion(pick(rng, voc.concepts), pick(rng, voc.individuals));
  }
  if (kind == 1 && !voc.individuals.empty() && !voc.roles.empty()) {
    return ElAxiom::RoleAssertion(pick(rng, voc.roles), pick(rng, voc.individuals), pick(rng, voc.individuals));
  }
  return ElAxiom::Inclusion(random_concept(rng, voc, uniform(rng, 1, concept_size)),
                            random_concept(rng, voc, uniform(rng, 1, concept_size)));
}

inline ElLiteral random_literal(Rng& rng, const Vocabulary& voc, int concept_size = 3) {
  return {random_axiom(rng, voc, concept_size), coin(rng)};
}

inline std::vector<ElLiteral> random_literals(Rng& rng, const Vocabulary& voc, int min_n, int max_n,
                                              int concept_size = 3) {
  std::vector<ElLiteral> out;
  int n = uniform(rng, min_n, max_n);
  for (int i = 0; i < n; ++i) out.push_back(random_literal(rng, voc, concept_size));
  return out;
}

inline ElFormula random_el_formula(Rng& rng, const Vocabulary& voc, int depth, int concept_size = 3) {
  if (depth <= 0 || coin(rng, 0.3)) return ElFormula::Lit(random_axiom(rng, voc, concept_size));
  if (coin(rng, 0.35)) return ElFormula::Not(random_el_formula(rng, voc, depth - 1, concept_size));
  return ElFormula::And(random_el_formula(rng, voc, depth - 1, concept_size),
                        random_el_formula(rng, voc, depth - 1, concept_size));
}

inline AgentWord random_word(Rng& rng, const Vocabulary& voc, int min_len, int max_len) {
  AgentWord w;
  int n = uniform(rng, min_len, max_len);
  for (int i = 0; i < n; ++i) w.push_back(pick(rng, voc.agents));
  return w;
}

struct ConjunctiveShape {
  int max_omega0 = 2;
  int max_positives = 3;
  int max_negatives = 2;
  int max_depth = 3;
  int max_body = 2;
  int concept_size = 3;
};

inline ConjunctiveElk random_conjunctive(Rng& rng, const Vocabulary& voc, const ConjunctiveShape& shape = {}) {
  for (;;) {
    ConjunctiveElk f;
    f.omega0 = random_literals(rng, voc, 0, shape.max_omega0, shape.concept_size);
    int np = uniform(rng, 0, shape.max_positives);
    for (int i = 0; i < np; ++i) {
      f.positives.push_back({random_word(rng, voc, 1, shape.max_depth),
                             random_literals(rng, voc, 1, shape.max_body, shape.concept_size)});
    }
    int nn = uniform(rng, 0, shape.max_negatives);
    for (int i = 0; i < nn; ++i) {
      f.negatives.push_back({random_word(rng, voc, 1, shape.max_depth),
                             random_literals(rng, voc, 1, shape.max_body, shape.concept_size)});
    }
    if (!f.omega0.empty() || !f.positives.empty() || !f.negatives.empty()) return f;
  }
}

// Boolean combination of K-prefixed EL formulas (prefix possibly empty).
inline ElkFormula random_elk_formula(Rng& rng, const Vocabulary& voc, int atoms, int body_depth = 1,
                                     int max_prefix = 2, int concept_size = 2) {
  std::vector<ElkFormula> pool;
  for (int i = 0; i < atoms; ++i) {
    pool.push_back(ElkFormula::Ax(random_word(rng, voc, 0, max_prefix),
                                  random_el_formula(rng, voc, body_depth, concept_size)));
  }
  auto leaf = [&]() {
    ElkFormula a = pick(rng, pool);
    return coin(rng, 0.4) ? ElkFormula::Not(a) : a;
  };
  ElkFormula f = leaf();
  int extra = uniform(rng, 0, atoms);
  for (int i = 0; i < extra; ++i) {
    ElkFormula g = leaf();
    f = ElkFormula::And(f, g);
    if (coin(rng, 0.3)) f = ElkFormula::Not(f);
  }
  return f;
}

inline ElInterpretation random_interpretation(Rng& rng, const Vocabulary& voc, int domain) {
  ElInterpretation I;
  I.domain_size = domain;
  for (const auto& c : voc.concepts) {
    auto& ext = I.concepts[c];
    for (int x = 0; x < domain; ++x) {
      if (coin(rng)) ext.insert(x);
    }
  }
  for (const auto& r : voc.roles) {
    auto& ext = I.roles[r];
    for (int x = 0; x < domain; ++x) {
      for (int y = 0; y < domain; ++y) {
        if (coin(rng, 0.3)) ext.insert({x, y});
      }
    }
  }
  for (const auto& a : voc.individuals) I.individuals[a] = uniform(rng, 0, domain - 1);
  return I;
}

inline PointedElk random_kripke(Rng& rng, const Vocabulary& voc, int worlds, int domain) {
  PointedElk p;
  for (int w = 0; w < worlds; ++w) p.structure.worlds.push_back(random_interpretation(rng, voc, domain));
  for (const auto& a : voc.agents) {
    WorldRelation pairs;
    for (int i = 0; i < worlds; ++i) {
      if (coin(rng, 0.5)) pairs.insert({i, uniform(rng, 0, worlds - 1)});
    }
    p.structure.relations[a] = equivalence_closure(pairs, worlds);
  }
  p.point = uniform(rng, 0, worlds - 1);
  return p;
}

// Named-form terminology: every inclusion has a concept name on one side.
inline std::vector<ElAxiom> random_named_terminology(Rng& rng, const Vocabulary& voc, int max_axioms,
                                                     int concept_size) {
  std::vector<ElAxiom> out;
  for (int n = uniform(rng, 1, max_axioms); n > 0; --n) {
    Concept name = Concept::Name(pick(rng, voc.concepts));
    Concept other = random_concept(rng, voc, uniform(rng, 1, concept_size));
    if (other == name) continue;
    out.push_back(coin(rng) ? ElAxiom::Inclusion(name, other) : ElAxiom::Inclusion(other, name));
  }
  return out;
}

}  // namespace elkat::testing
