#include "elkat/completion.h"

#include <deque>

namespace elkat {

std::string to_string(const CBoxAxiom& a) { return to_string(a.lhs) + " <= " + to_string(a.rhs); }

NormalAxiom NormalAxiom::Sub(Concept a, Concept rhs) {
  NormalAxiom n;
  n.kind = Kind::kSub;
  n.a = std::move(a);
  n.rhs = std::move(rhs);
  return n;
}

NormalAxiom NormalAxiom::Conj(Concept a, Concept b, Concept rhs) {
  NormalAxiom n;
  n.kind = Kind::kConj;
  n.a = std::move(a);
  n.b = std::move(b);
  n.rhs = std::move(rhs);
  return n;
}

NormalAxiom NormalAxiom::ExistsRight(Concept a, std::string role, Concept filler) {
  NormalAxiom n;
  n.kind = Kind::kExistsRight;
  n.a = std::move(a);
  n.role = std::move(role);
  n.rhs = std::move(filler);
  return n;
}

NormalAxiom NormalAxiom::ExistsLeft(std::string role, Concept filler, Concept rhs) {
  NormalAxiom n;
  n.kind = Kind::kExistsLeft;
  n.a = std::move(filler);
  n.role = std::move(role);
  n.rhs = std::move(rhs);
  return n;
}

CBoxAxiom NormalAxiom::as_gci() const {
  switch (kind) {
    case Kind::kSub: return {a, rhs};
    case Kind::kConj: return {Concept::Conj(a, b), rhs};
    case Kind::kExistsRight: return {a, Concept::Exists(role, rhs)};
    case Kind::kExistsLeft: return {Concept::Exists(role, a), rhs};
  }
  return {};
}

std::string FreshNames::next() {
  for (;;) {
    std::string name = prefix_ + std::to_string(++counter_);
    if (used_.insert(name).second) return name;
  }
}

namespace {

// Concepts whose extension is empty in every interpretation.
bool is_empty_concept(const Concept& c) {
  switch (c.kind()) {
    case Concept::Kind::kBottom: return true;
    case Concept::Kind::kConj: return is_empty_concept(c.lhs()) || is_empty_concept(c.rhs());
    case Concept::Kind::kExists: return is_empty_concept(c.filler());
    default: return false;
  }
}

void flatten_conj(const Concept& c, std::vector<Concept>* out) {
  if (c.kind() == Concept::Kind::kConj) {
    flatten_conj(c.lhs(), out);
    flatten_conj(c.rhs(), out);
  } else {
    out->push_back(c);
  }
}

std::set<std::string> used_names(const std::vector<CBoxAxiom>& cbox) {
  Signature sig;
  for (const auto& a : cbox) {
    sig.merge(signature(a.lhs));
    sig.merge(signature(a.rhs));
  }
  std::set<std::string> used = sig.concepts;
  used.insert(sig.roles.begin(), sig.roles.end());
  used.insert(sig.individuals.begin(), sig.individuals.end());
  return used;
}

class Normalizer {
 public:
  explicit Normalizer(std::set<std::string> used) : fresh_("__N", std::move(used)) {}

  void run(const std::vector<CBoxAxiom>& cbox) {
    for (const auto& a : cbox) queue_.push_back(a);
    while (!queue_.empty()) {
      CBoxAxiom a = std::move(queue_.front());
      queue_.pop_front();
      step(a.lhs, a.rhs);
    }
  }

  NormalizedOntology result;

 private:
  Concept fresh_for(const Concept& origin) {
    std::string name = fresh_.next();
    result.fresh_map[name] = to_string(origin);
    return Concept::Name(name);
  }

  void step(const Concept& lhs, Concept rhs) {
    if (is_empty_concept(lhs)) return;
    if (is_empty_concept(rhs)) rhs = Concept::Bottom();
    if (lhs.is_basic() && rhs.is_basic()) {
      result.axioms.insert(NormalAxiom::Sub(lhs, rhs));
      return;
    }
    if (lhs.is_basic()) {
      if (rhs.kind() == Concept::Kind::kConj) {
        queue_.push_front({lhs, rhs.rhs()});
        queue_.push_front({lhs, rhs.lhs()});
        return;
      }
      const Concept& filler = rhs.filler();
      if (filler.is_basic()) {
        result.axioms.insert(NormalAxiom::ExistsRight(lhs, rhs.name(), filler));
      } else {
        Concept n = fresh_for(filler);
        result.axioms.insert(NormalAxiom::ExistsRight(lhs, rhs.name(), n));
        queue_.push_front({n, filler});
      }
      return;
    }
    if (!rhs.is_basic()) {
      Concept x = fresh_for(lhs);
      queue_.push_front({x, rhs});
      queue_.push_front({lhs, x});
      return;
    }
    if (lhs.kind() == Concept::Kind::kExists) {
      const Concept& filler = lhs.filler();
      if (filler.is_basic()) {
        result.axioms.insert(NormalAxiom::ExistsLeft(lhs.name(), filler, rhs));
      } else {
        Concept n = fresh_for(filler);
        result.axioms.insert(NormalAxiom::ExistsLeft(lhs.name(), n, rhs));
        queue_.push_front({filler, n});
      }
      return;
    }
    std::vector<Concept> parts;
    flatten_conj(lhs, &parts);
    std::vector<CBoxAxiom> pending;
    for (auto& p : parts) {
      if (!p.is_basic()) {
        Concept n = fresh_for(p);
        pending.push_back({p, n});
        p = n;
      }
    }
    Concept acc = parts[0];
    for (std::size_t i = 1; i + 1 < parts.size(); ++i) {
      Concept n = fresh_for(Concept::Conj(acc, parts[i]));
      result.axioms.insert(NormalAxiom::Conj(acc, parts[i], n));
      acc = n;
    }
    result.axioms.insert(NormalAxiom::Conj(acc, parts.back(), rhs));
    for (auto it = pending.rbegin(); it != pending.rend(); ++it) queue_.push_front(*it);
  }

  FreshNames fresh_;
  std::deque<CBoxAxiom> queue_;
};

}  // namespace

NormalizedOntology normalize(const std::vector<CBoxAxiom>& cbox) {
  Normalizer n(used_names(cbox));
  n.run(cbox);
  return std::move(n.result);
}

NormalizedOntology normalize(const std::vector<ElAxiom>& ontology) {
  std::vector<CBoxAxiom> cbox;
  for (const auto& a : ontology) {
    switch (a.kind) {
      case ElAxiom::Kind::kInclusion:
        cbox.push_back({a.lhs, a.rhs});
        break;
      case ElAxiom::Kind::kConceptAssertion:
        cbox.push_back({Concept::Nominal(a.first), Concept::Name(a.symbol)});
        break;
      case ElAxiom::Kind::kRoleAssertion:
        cbox.push_back({Concept::Nominal(a.first), Concept::Exists(a.symbol, Concept::Nominal(a.second))});
        break;
    }
  }
  return normalize(cbox);
}

int CompletionState::index_of(const Concept& c) const {
  auto it = index.find(c);
  return it == index.end() ? -1 : it->second;
}

bool CompletionState::has(const Concept& c, const Concept& d) const {
  int i = index_of(c);
  int j = index_of(d);
  return i >= 0 && j >= 0 && subsumers[i][j];
}

std::vector<Concept> CompletionState::subsumers_of(const Concept& c) const {
  std::vector<Concept> out;
  int i = index_of(c);
  if (i < 0) return out;
  for (std::size_t j = 0; j < basics.size(); ++j) {
    if (subsumers[i][j]) out.push_back(basics[j]);
  }
  return out;
}

CompletionState initial_state(const NormalizedOntology& o, const std::vector<Concept>& extra_basics) {
  CompletionState s;
  auto add = [&](const Concept& c) {
    if (c.kind() == Concept::Kind::kConj || c.kind() == Concept::Kind::kExists) return;
    if (s.index.emplace(c, static_cast<int>(s.basics.size())).second) s.basics.push_back(c);
  };
  add(Concept::Top());
  add(Concept::Bottom());
  for (const auto& ax : o.axioms) {
    add(ax.a);
    if (ax.kind == NormalAxiom::Kind::kConj) add(ax.b);
    add(ax.rhs);
    if (!ax.role.empty()) s.relations[ax.role];
  }
  for (const auto& c : extra_basics) add(c);
  const std::size_t n = s.basics.size();
  s.subsumers.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    s.subsumers[i][i] = true;
    s.subsumers[i][0] = true;
  }
  return s;
}

namespace {

struct AxiomIndex {
  std::vector<std::vector<int>> sub;                          // a -> rhs
  std::vector<std::vector<std::pair<int, int>>> conj;         // a -> (b, rhs); both orders
  std::vector<std::vector<std::pair<std::string, int>>> exr;  // a -> (r, filler)
  std::map<std::string, std::vector<std::vector<int>>> exl;   // r -> filler -> rhs
};

AxiomIndex build_index(const NormalizedOntology& o, const CompletionState& s) {
  const std::size_t n = s.basics.size();
  AxiomIndex ix;
  ix.sub.resize(n);
  ix.conj.resize(n);
  ix.exr.resize(n);
  for (const auto& ax : o.axioms) {
    int a = s.index_of(ax.a);
    int rhs = s.index_of(ax.rhs);
    switch (ax.kind) {
      case NormalAxiom::Kind::kSub:
        ix.sub[a].push_back(rhs);
        break;
      case NormalAxiom::Kind::kConj: {
        int b = s.index_of(ax.b);
        ix.conj[a].push_back({b, rhs});
        if (a != b) ix.conj[b].push_back({a, rhs});
        break;
      }
      case NormalAxiom::Kind::kExistsRight:
        ix.exr[a].push_back({ax.role, rhs});
        break;
      case NormalAxiom::Kind::kExistsLeft: {
        auto& per_filler = ix.exl[ax.role];
        if (per_filler.empty()) per_filler.resize(n);
        per_filler[a].push_back(rhs);
        break;
      }
    }
  }
  return ix;
}

constexpr int kTop = 0;
constexpr int kBottom = 1;

bool rules_once(const AxiomIndex& ix, CompletionState* st) {
  auto& S = st->subsumers;
  const int n = static_cast<int>(st->basics.size());
  bool changed = false;
  auto add = [&](int c, int d) {
    if (!S[c][d]) {
      S[c][d] = true;
      changed = true;
    }
  };

  for (int c = 0; c < n; ++c) {
    for (int d = 0; d < n; ++d) {
      if (!S[c][d]) continue;
      for (int e : ix.sub[d]) add(c, e);
      for (const auto& [d2, e] : ix.conj[d]) {
        if (S[c][d2]) add(c, e);
      }
      for (const auto& [r, e] : ix.exr[d]) {
        if (st->relations[r].insert({c, e}).second) changed = true;
      }
    }
  }

  for (const auto& [r, edges] : st->relations) {
    auto exl = ix.exl.find(r);
    for (const auto& [c, d] : edges) {
      if (S[d][kBottom]) add(c, kBottom);
      if (exl == ix.exl.end()) continue;
      for (int e = 0; e < n; ++e) {
        if (!S[d][e]) continue;
        for (int f : exl->second[e]) add(c, f);
      }
    }
  }

  std::vector<int> nominals;
  for (int i = 0; i < n; ++i) {
    if (st->basics[i].kind() == Concept::Kind::kNominal) nominals.push_back(i);
  }
  if (nominals.empty()) return changed;

  std::vector<std::vector<int>> succ(n);
  for (const auto& [r, edges] : st->relations) {
    for (const auto& [c, d] : edges) succ[c].push_back(d);
  }
  auto reach_from = [&](std::vector<bool>* seen, std::vector<int> frontier) {
    for (int x : frontier) (*seen)[x] = true;
    while (!frontier.empty()) {
      int x = frontier.back();
      frontier.pop_back();
      for (int y : succ[x]) {
        if (!(*seen)[y]) {
          (*seen)[y] = true;
          frontier.push_back(y);
        }
      }
    }
  };
  std::vector<bool> anchored(n, false);
  std::vector<int> roots = nominals;
  roots.push_back(kTop);
  reach_from(&anchored, roots);

  for (int c = 0; c < n; ++c) {
    bool has_nominal = false;
    for (int a : nominals) has_nominal = has_nominal || S[c][a];
    if (!has_nominal) continue;
    std::vector<bool> reach = anchored;
    reach_from(&reach, {c});
    for (int d = 0; d < n; ++d) {
      if (d == c || !reach[d]) continue;
      bool shared = false;
      for (int a : nominals) shared = shared || (S[c][a] && S[d][a]);
      if (!shared) continue;
      for (int e = 0; e < n; ++e) {
        if (S[d][e]) add(c, e);
      }
    }
  }
  return changed;
}

bool has_clash(const CompletionState& st) {
  if (st.subsumers[kTop][kBottom]) return true;
  for (std::size_t i = 0; i < st.basics.size(); ++i) {
    if (st.basics[i].kind() == Concept::Kind::kNominal && st.subsumers[i][kBottom]) return true;
  }
  return false;
}

}  // namespace

bool apply_rules(const NormalizedOntology& o, CompletionState* state) {
  bool changed = rules_once(build_index(o, *state), state);
  state->clash = has_clash(*state);
  return changed;
}

CompletionState saturate(const NormalizedOntology& o, const std::vector<Concept>& extra_basics) {
  CompletionState st = initial_state(o, extra_basics);
  AxiomIndex ix = build_index(o, st);
  while (rules_once(ix, &st)) {
  }
  st.clash = has_clash(st);
  return st;
}

bool elpp_consistent(const NormalizedOntology& o) { return !saturate(o).clash; }

}  // namespace elkat
