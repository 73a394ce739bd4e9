#include "elkat/interpretation.h"

#include <algorithm>
#include <numeric>

namespace elkat {

Element ElInterpretation::individual(const std::string& name) const {
  auto it = individuals.find(name);
  if (it == individuals.end()) throw InterpretationError("unmapped individual '" + name + "'");
  return it->second;
}

void ElInterpretation::validate() const {
  if (domain_size < 1) throw InterpretationError("empty domain");
  auto in = [&](Element e) { return e >= 0 && e < domain_size; };
  for (const auto& [name, ext] : concepts) {
    for (Element e : ext) {
      if (!in(e)) throw InterpretationError("concept '" + name + "' references element outside the domain");
    }
  }
  for (const auto& [name, ext] : roles) {
    for (const auto& [d, e] : ext) {
      if (!in(d) || !in(e)) throw InterpretationError("role '" + name + "' references element outside the domain");
    }
  }
  for (const auto& [name, e] : individuals) {
    if (!in(e)) throw InterpretationError("individual '" + name + "' maps outside the domain");
  }
}

ElInterpretation disjoint_union(const ElInterpretation& a, const ElInterpretation& b, Element* offset_of_b) {
  ElInterpretation out = a;
  const int off = a.domain_size;
  out.domain_size = a.domain_size + b.domain_size;
  for (const auto& [name, ext] : b.concepts) {
    auto& dst = out.concepts[name];
    for (Element e : ext) dst.insert(e + off);
  }
  for (const auto& [name, ext] : b.roles) {
    auto& dst = out.roles[name];
    for (const auto& [d, e] : ext) dst.insert({d + off, e + off});
  }
  if (offset_of_b) *offset_of_b = off;
  return out;
}

namespace {

std::vector<bool> eval_mask(const ElInterpretation& I, const Concept& c) {
  const auto n = static_cast<std::size_t>(I.domain_size);
  switch (c.kind()) {
    case Concept::Kind::kTop:
      return std::vector<bool>(n, true);
    case Concept::Kind::kBottom:
      return std::vector<bool>(n, false);
    case Concept::Kind::kName: {
      std::vector<bool> m(n, false);
      if (auto it = I.concepts.find(c.name()); it != I.concepts.end()) {
        for (Element e : it->second) m[e] = true;
      }
      return m;
    }
    case Concept::Kind::kNominal: {
      std::vector<bool> m(n, false);
      m[I.individual(c.name())] = true;
      return m;
    }
    case Concept::Kind::kConj: {
      auto l = eval_mask(I, c.lhs());
      auto r = eval_mask(I, c.rhs());
      for (std::size_t i = 0; i < n; ++i) l[i] = l[i] && r[i];
      return l;
    }
    case Concept::Kind::kExists: {
      auto f = eval_mask(I, c.filler());
      std::vector<bool> m(n, false);
      if (auto it = I.roles.find(c.name()); it != I.roles.end()) {
        for (const auto& [d, e] : it->second) {
          if (f[e]) m[d] = true;
        }
      }
      return m;
    }
  }
  return {};
}

}  // namespace

std::set<Element> eval_concept(const ElInterpretation& I, const Concept& c) {
  auto m = eval_mask(I, c);
  std::set<Element> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i]) out.insert(static_cast<Element>(i));
  }
  return out;
}

bool check_el(const ElInterpretation& I, const ElAxiom& a) {
  switch (a.kind) {
    case ElAxiom::Kind::kInclusion: {
      auto l = eval_mask(I, a.lhs);
      auto r = eval_mask(I, a.rhs);
      for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i] && !r[i]) return false;
      }
      return true;
    }
    case ElAxiom::Kind::kConceptAssertion: {
      Element e = I.individual(a.first);
      auto it = I.concepts.find(a.symbol);
      return it != I.concepts.end() && it->second.count(e) > 0;
    }
    case ElAxiom::Kind::kRoleAssertion: {
      Element d = I.individual(a.first);
      Element e = I.individual(a.second);
      auto it = I.roles.find(a.symbol);
      return it != I.roles.end() && it->second.count({d, e}) > 0;
    }
  }
  return false;
}

bool check_el(const ElInterpretation& I, const ElFormula& alpha) {
  switch (alpha.kind()) {
    case ElFormula::Kind::kLit:
      return check_el(I, alpha.axiom());
    case ElFormula::Kind::kNot:
      return !check_el(I, alpha.child());
    case ElFormula::Kind::kAnd:
      return check_el(I, alpha.lhs()) && check_el(I, alpha.rhs());
  }
  return false;
}

bool is_equivalence(const WorldRelation& r, int n) {
  for (const auto& [i, j] : r) {
    if (i < 0 || j < 0 || i >= n || j >= n) return false;
    if (!r.count({j, i})) return false;
  }
  for (int i = 0; i < n; ++i) {
    if (!r.count({i, i})) return false;
  }
  for (const auto& [i, j] : r) {
    for (auto it = r.lower_bound({j, 0}); it != r.end() && it->first == j; ++it) {
      if (!r.count({i, it->second})) return false;
    }
  }
  return true;
}

void ElkInterpretation::validate() const {
  if (worlds.empty()) throw MalformedStructure("no worlds");
  for (const auto& [agent, r] : relations) {
    if (!is_equivalence(r, num_worlds())) {
      throw MalformedStructure("relation of agent '" + agent + "' is not an equivalence relation");
    }
  }
}

WorldRelation equivalence_closure(const WorldRelation& pairs, int n) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [i, j] : pairs) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("equivalence_closure: world index out of range");
    parent[find(i)] = find(j);
  }
  WorldRelation out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (find(i) == find(j)) out.insert({i, j});
    }
  }
  return out;
}

namespace {

// Worlds reachable from `from` along sigma.
std::vector<bool> successors(const ElkInterpretation& m, const AgentWord& sigma, int from) {
  const int n = m.num_worlds();
  std::vector<bool> cur(n, false);
  cur[from] = true;
  for (const auto& agent : sigma) {
    auto it = m.relations.find(agent);
    if (it == m.relations.end()) continue;  // identity
    std::vector<bool> next(n, false);
    for (const auto& [i, j] : it->second) {
      if (cur[i]) next[j] = true;
    }
    cur = std::move(next);
  }
  return cur;
}

bool holds(const ElkInterpretation& m, int w, const ElkFormula& phi) {
  switch (phi.kind()) {
    case ElkFormula::Kind::kAx: {
      auto reach = successors(m, phi.prefix(), w);
      for (int v = 0; v < m.num_worlds(); ++v) {
        if (reach[v] && !check_el(m.worlds[v], phi.body())) return false;
      }
      return true;
    }
    case ElkFormula::Kind::kNot:
      return !holds(m, w, phi.child());
    case ElkFormula::Kind::kAnd:
      return holds(m, w, phi.lhs()) && holds(m, w, phi.rhs());
  }
  return false;
}

}  // namespace

WorldRelation compose_relation(const ElkInterpretation& m, const AgentWord& sigma) {
  WorldRelation out;
  for (int w = 0; w < m.num_worlds(); ++w) {
    auto reach = successors(m, sigma, w);
    for (int v = 0; v < m.num_worlds(); ++v) {
      if (reach[v]) out.insert({w, v});
    }
  }
  return out;
}

bool check_elk(const PointedElk& p, const ElkFormula& phi) {
  p.structure.validate();
  if (p.point < 0 || p.point >= p.structure.num_worlds()) throw MalformedStructure("point out of range");
  return holds(p.structure, p.point, phi);
}

bool check_elk(const PointedElk& p, const ConjunctiveElk& phi) {
  p.structure.validate();
  if (p.point < 0 || p.point >= p.structure.num_worlds()) throw MalformedStructure("point out of range");
  const auto& m = p.structure;
  auto body_holds = [&](int v, const std::vector<ElLiteral>& body) {
    return std::all_of(body.begin(), body.end(),
                       [&](const ElLiteral& l) { return check_el(m.worlds[v], l.axiom) == l.positive; });
  };
  if (!body_holds(p.point, phi.omega0)) return false;
  auto boxed = [&](const ModalConjunct& c) {
    auto reach = successors(m, c.sigma, p.point);
    for (int v = 0; v < m.num_worlds(); ++v) {
      if (reach[v] && !body_holds(v, c.body)) return false;
    }
    return true;
  };
  return std::all_of(phi.positives.begin(), phi.positives.end(), boxed) &&
         std::none_of(phi.negatives.begin(), phi.negatives.end(), boxed);
}

}  // namespace elkat
