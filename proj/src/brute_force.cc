#include "elkat/brute_force.h"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>

#include "elkat/prop.h"

namespace elkat {

namespace {

using Mask = std::uint32_t;

// A concept compiled to straight-line code over element bitmasks.
struct ConceptOp {
  enum class Kind { kTop, kName, kConj, kExists } kind;
  int arg = -1;  // name or role index
  int a = -1;
  int b = -1;
};

struct CompiledAxiom {
  ElAxiom::Kind kind;
  int lhs = -1;  // registers of an inclusion
  int rhs = -1;
  int symbol = -1;
  int first = -1;
  int second = -1;
};

struct BitInterpretation {
  int d = 1;
  std::vector<int> individuals;
  std::vector<Mask> concepts;
  std::vector<Mask> roles;  // bit x*d+y for (x, y)
};

class Compiler {
 public:
  explicit Compiler(const Signature& sig)
      : concepts_(sig.concepts.begin(), sig.concepts.end()),
        roles_(sig.roles.begin(), sig.roles.end()),
        individuals_(sig.individuals.begin(), sig.individuals.end()) {}

  int compile(const ElAxiom& a) {
    CompiledAxiom c{a.kind};
    switch (a.kind) {
      case ElAxiom::Kind::kInclusion:
        c.lhs = concept_reg(a.lhs);
        c.rhs = concept_reg(a.rhs);
        break;
      case ElAxiom::Kind::kConceptAssertion:
        c.symbol = index(concepts_, a.symbol);
        c.first = index(individuals_, a.first);
        break;
      case ElAxiom::Kind::kRoleAssertion:
        c.symbol = index(roles_, a.symbol);
        c.first = index(individuals_, a.first);
        c.second = index(individuals_, a.second);
        break;
    }
    axioms_.push_back(c);
    return static_cast<int>(axioms_.size()) - 1;
  }

  // Bit i of the result is the truth of compiled axiom i.
  std::uint64_t evaluate(const BitInterpretation& I, std::vector<Mask>* regs) const {
    const Mask full = (Mask{1} << I.d) - 1;
    regs->resize(ops_.size());
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      const ConceptOp& op = ops_[i];
      Mask m = 0;
      switch (op.kind) {
        case ConceptOp::Kind::kTop: m = full; break;
        case ConceptOp::Kind::kName: m = I.concepts[op.arg]; break;
        case ConceptOp::Kind::kConj: m = (*regs)[op.a] & (*regs)[op.b]; break;
        case ConceptOp::Kind::kExists: {
          Mask filler = (*regs)[op.a];
          Mask role = I.roles[op.arg];
          for (int x = 0; x < I.d; ++x) {
            if ((role >> (x * I.d)) & full & filler) m |= Mask{1} << x;
          }
          break;
        }
      }
      (*regs)[i] = m;
    }
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < axioms_.size(); ++i) {
      const CompiledAxiom& c = axioms_[i];
      bool v = false;
      switch (c.kind) {
        case ElAxiom::Kind::kInclusion:
          v = ((*regs)[c.lhs] & ~(*regs)[c.rhs]) == 0;
          break;
        case ElAxiom::Kind::kConceptAssertion:
          v = (I.concepts[c.symbol] >> I.individuals[c.first]) & 1;
          break;
        case ElAxiom::Kind::kRoleAssertion:
          v = (I.roles[c.symbol] >> (I.individuals[c.first] * I.d + I.individuals[c.second])) & 1;
          break;
      }
      if (v) out |= std::uint64_t{1} << i;
    }
    return out;
  }

  // Calls `visit` on every interpretation up to max_domain in enumeration
  // order until it returns true.
  void enumerate(int max_domain, const std::function<bool(const BitInterpretation&)>& visit) const {
    const int nc = static_cast<int>(concepts_.size());
    const int nr = static_cast<int>(roles_.size());
    const int ni = static_cast<int>(individuals_.size());
    for (int d = 1; d <= max_domain; ++d) {
      if (d > 5 || d * nc + d * d * nr > 30) throw std::invalid_argument("brute-force search space too large");
      BitInterpretation I;
      I.d = d;
      I.individuals.assign(ni, 0);
      I.concepts.assign(nc, 0);
      I.roles.assign(nr, 0);
      const Mask concept_limit = Mask{1} << d;
      const std::uint64_t role_limit = std::uint64_t{1} << (d * d);
      // individual maps as restricted growth strings below d
      std::function<bool(int, int)> inds = [&](int i, int used) -> bool {
        if (i == ni) {
          std::fill(I.concepts.begin(), I.concepts.end(), 0);
          for (;;) {
            std::fill(I.roles.begin(), I.roles.end(), 0);
            for (;;) {
              if (visit(I)) return true;
              int k = nr - 1;
              while (k >= 0 && ++I.roles[k] == role_limit) I.roles[k--] = 0;
              if (k < 0) break;
            }
            int k = nc - 1;
            while (k >= 0 && ++I.concepts[k] == concept_limit) I.concepts[k--] = 0;
            if (k < 0) return false;
          }
        }
        for (int v = 0; v <= std::min(used, d - 1); ++v) {
          I.individuals[i] = v;
          if (inds(i + 1, std::max(used, v + 1))) return true;
        }
        return false;
      };
      if (inds(0, 0)) return;
    }
  }

  ElInterpretation materialize(const BitInterpretation& I) const {
    ElInterpretation out;
    out.domain_size = I.d;
    for (std::size_t i = 0; i < concepts_.size(); ++i) {
      auto& ext = out.concepts[concepts_[i]];
      for (int x = 0; x < I.d; ++x) {
        if ((I.concepts[i] >> x) & 1) ext.insert(x);
      }
    }
    for (std::size_t i = 0; i < roles_.size(); ++i) {
      auto& ext = out.roles[roles_[i]];
      for (int x = 0; x < I.d; ++x) {
        for (int y = 0; y < I.d; ++y) {
          if ((I.roles[i] >> (x * I.d + y)) & 1) ext.insert({x, y});
        }
      }
    }
    for (std::size_t i = 0; i < individuals_.size(); ++i) out.individuals[individuals_[i]] = I.individuals[i];
    return out;
  }

 private:
  static int index(const std::vector<std::string>& v, const std::string& s) {
    return static_cast<int>(std::find(v.begin(), v.end(), s) - v.begin());
  }

  int concept_reg(const Concept& c) {
    ConceptOp op{ConceptOp::Kind::kTop};
    switch (c.kind()) {
      case Concept::Kind::kTop:
        break;
      case Concept::Kind::kName:
        op = {ConceptOp::Kind::kName, index(concepts_, c.name())};
        break;
      case Concept::Kind::kConj: {
        int a = concept_reg(c.lhs());
        int b = concept_reg(c.rhs());
        op = {ConceptOp::Kind::kConj, -1, a, b};
        break;
      }
      case Concept::Kind::kExists: {
        int a = concept_reg(c.filler());
        op = {ConceptOp::Kind::kExists, index(roles_, c.name()), a};
        break;
      }
      default:
        throw FragmentError("brute-force search takes EL input only: " + to_string(c));
    }
    ops_.push_back(op);
    return static_cast<int>(ops_.size()) - 1;
  }

  std::vector<std::string> concepts_;
  std::vector<std::string> roles_;
  std::vector<std::string> individuals_;
  std::vector<ConceptOp> ops_;
  std::vector<CompiledAxiom> axioms_;
};

bool eval_body(const ElFormula& f, const std::vector<ElAxiom>& axioms, std::uint64_t valuation) {
  switch (f.kind()) {
    case ElFormula::Kind::kLit: {
      auto i = std::find(axioms.begin(), axioms.end(), f.axiom()) - axioms.begin();
      return (valuation >> i) & 1;
    }
    case ElFormula::Kind::kNot:
      return !eval_body(f.child(), axioms, valuation);
    case ElFormula::Kind::kAnd:
      return eval_body(f.lhs(), axioms, valuation) && eval_body(f.rhs(), axioms, valuation);
  }
  return false;
}

// Restricted growth strings of length n; rgs[0] == 0 always.
void all_partitions(int n, std::vector<int>* cur, std::vector<std::vector<int>>* out) {
  if (static_cast<int>(cur->size()) == n) {
    out->push_back(*cur);
    return;
  }
  int top = cur->empty() ? 0 : *std::max_element(cur->begin(), cur->end()) + 1;
  for (int v = 0; v <= top; ++v) {
    cur->push_back(v);
    all_partitions(n, cur, out);
    cur->pop_back();
  }
}

// One representative per partition of {0..n-1} up to permutations fixing 0:
// the point's block first, remaining blocks by non-increasing size.
std::vector<std::vector<int>> canonical_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> sizes;
  std::function<void(int, int)> split = [&](int rest, int max_part) {
    if (rest == 0) {
      std::vector<int> rgs;
      for (std::size_t b = 0; b < sizes.size(); ++b) rgs.insert(rgs.end(), sizes[b], static_cast<int>(b));
      out.push_back(rgs);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      sizes.push_back(p);
      split(rest - p, p);
      sizes.pop_back();
    }
  };
  for (int s0 = n; s0 >= 1; --s0) {
    sizes = {s0};
    split(n - s0, n - s0);
  }
  return out;
}

std::vector<Mask> class_masks(const std::vector<int>& rgs) {
  std::vector<Mask> cls(rgs.size(), 0);
  for (std::size_t v = 0; v < rgs.size(); ++v) {
    for (std::size_t w = 0; w < rgs.size(); ++w) {
      if (rgs[v] == rgs[w]) cls[v] |= Mask{1} << w;
    }
  }
  return cls;
}

Mask step(Mask worlds, const std::vector<Mask>& cls) {
  Mask out = 0;
  for (std::size_t v = 0; v < cls.size(); ++v) {
    if ((worlds >> v) & 1) out |= cls[v];
  }
  return out;
}

struct Atom {
  std::vector<int> agents;  // indices into the agent list
  ElFormula body;
};

class ElkSearch {
 public:
  ElkSearch(const ElkFormula& phi, BruteForceBounds bounds) : bounds_(bounds) {
    Signature sig = signature(phi);
    agents_.assign(sig.agents.begin(), sig.agents.end());
    skeleton_ = abstract(phi);
    if (atoms_.size() > 16) throw std::invalid_argument("brute-force search over too many modal atoms");
    if (axioms_.size() > 64) throw std::invalid_argument("brute-force search over too many EL axioms");

    compiler_.emplace(sig);
    for (const auto& a : axioms_) compiler_->compile(a);
    std::map<std::uint64_t, std::size_t> seen;
    std::vector<Mask> regs;
    compiler_->enumerate(bounds.max_domain, [&](const BitInterpretation& I) {
      std::uint64_t v = compiler_->evaluate(I, &regs);
      if (seen.emplace(v, representatives_.size()).second) {
        representatives_.push_back(I);
        body_true_.push_back(0);
        for (std::size_t a = 0; a < atoms_.size(); ++a) {
          if (eval_body(atoms_[a].body, axioms_, v)) body_true_.back() |= Mask{1} << a;
        }
      }
      return false;
    });

    const Mask m = static_cast<Mask>(atoms_.size());
    full_atoms_ = (Mask{1} << m) - 1;
    for (Mask t = 0; t <= full_atoms_; ++t) {
      if (skeleton_.eval_bits(t)) feasible_.push_back(t);
    }
  }

  BruteForceResult run() {
    BruteForceResult result;
    if (feasible_.empty() || representatives_.empty()) return result;
    for (int w = 1; w <= bounds_.max_worlds; ++w) {
      if (w > 1 && agents_.empty()) break;
      if (w > 30) throw std::invalid_argument("brute-force search over too many worlds");
      if (search_worlds(w, &result)) return result;
    }
    return result;
  }

 private:
  PropFormula abstract(const ElkFormula& f) {
    switch (f.kind()) {
      case ElkFormula::Kind::kAx: {
        Atom atom{{}, f.body()};
        for (const auto& a : f.prefix()) {
          atom.agents.push_back(static_cast<int>(std::find(agents_.begin(), agents_.end(), a) - agents_.begin()));
        }
        for (const auto& ax : axioms_of(f.body())) {
          if (std::find(axioms_.begin(), axioms_.end(), ax) == axioms_.end()) axioms_.push_back(ax);
        }
        for (std::size_t i = 0; i < atoms_.size(); ++i) {
          if (atoms_[i].agents == atom.agents && atoms_[i].body == atom.body) {
            return PropFormula::Var(static_cast<int>(i));
          }
        }
        atoms_.push_back(std::move(atom));
        return PropFormula::Var(static_cast<int>(atoms_.size()) - 1);
      }
      case ElkFormula::Kind::kNot:
        return PropFormula::Not(abstract(f.child()));
      case ElkFormula::Kind::kAnd:
        return PropFormula::And(abstract(f.lhs()), abstract(f.rhs()));
    }
    return PropFormula::True();
  }

  // Served-atom sets a world with atom mask `reach` can contribute when the
  // atoms in `t` are true; empty if no valuation is compatible.
  const std::vector<Mask>& options(Mask t, Mask reach) {
    auto [it, inserted] = options_.try_emplace({t, reach});
    if (inserted) {
      std::vector<bool> have(full_atoms_ + 1, false);
      for (Mask bt : body_true_) {
        if (reach & t & ~bt) continue;
        Mask served = reach & ~t & ~bt & full_atoms_;
        if (!have[served]) {
          have[served] = true;
          it->second.push_back(served);
        }
      }
    }
    return it->second;
  }

  // suffix[i][s]: served set s reachable from worlds i.. ; suffix[n] = {0}.
  std::optional<std::vector<std::vector<bool>>> solve(Mask t, const std::vector<Mask>& reach) {
    const std::size_t n = reach.size();
    std::vector<std::vector<bool>> suffix(n + 1, std::vector<bool>(full_atoms_ + 1, false));
    suffix[n][0] = true;
    for (std::size_t i = n; i-- > 0;) {
      const auto& opts = options(t, reach[i]);
      if (opts.empty()) return std::nullopt;
      for (Mask s = 0; s <= full_atoms_; ++s) {
        if (!suffix[i + 1][s]) continue;
        for (Mask o : opts) suffix[i][s | o] = true;
      }
    }
    const Mask need = ~t & full_atoms_;
    for (Mask s = 0; s <= full_atoms_; ++s) {
      if (suffix[0][s] && (s & need) == need) return suffix;
    }
    return std::nullopt;
  }

  std::optional<Mask> first_feasible(const std::vector<Mask>& reach) {
    std::vector<Mask> key(reach.begin() + 1, reach.end());
    std::sort(key.begin(), key.end());
    key.insert(key.begin(), reach[0]);
    auto [it, inserted] = verdicts_.try_emplace(key);
    if (inserted) {
      for (Mask t : feasible_) {
        if (solve(t, key)) {
          it->second = t;
          break;
        }
      }
    }
    return it->second;
  }

  bool search_worlds(int w, BruteForceResult* result) {
    const std::size_t na = agents_.size();
    std::vector<std::vector<std::vector<int>>> choices(na);
    if (na > 0) {
      choices[0] = canonical_partitions(w);
      std::vector<int> cur;
      std::vector<std::vector<int>> all;
      all_partitions(w, &cur, &all);
      for (std::size_t a = 1; a < na; ++a) choices[a] = all;
    }
    std::vector<std::size_t> pick(na, 0);
    std::vector<std::vector<Mask>> cls(na);
    const Mask all_worlds = (Mask{1} << w) - 1;
    for (;;) {
      for (std::size_t a = 0; a < na; ++a) cls[a] = class_masks(choices[a][pick[a]]);
      Mask reached = 1;
      for (;;) {
        Mask next = reached;
        for (std::size_t a = 0; a < na; ++a) next |= step(reached, cls[a]);
        if (next == reached) break;
        reached = next;
      }
      if (reached == all_worlds) {
        std::vector<Mask> reach(w, 0);
        for (std::size_t i = 0; i < atoms_.size(); ++i) {
          Mask worlds = 1;
          for (int a : atoms_[i].agents) worlds = step(worlds, cls[a]);
          for (int v = 0; v < w; ++v) {
            if ((worlds >> v) & 1) reach[v] |= Mask{1} << i;
          }
        }
        if (auto t = first_feasible(reach)) {
          build(*t, reach, choices, pick, result);
          return true;
        }
      }
      std::size_t k = na;
      while (k > 0 && ++pick[k - 1] == choices[k - 1].size()) pick[--k] = 0;
      if (k == 0) return false;
    }
  }

  void build(Mask t, const std::vector<Mask>& reach, const std::vector<std::vector<std::vector<int>>>& choices,
             const std::vector<std::size_t>& pick, BruteForceResult* result) {
    auto suffix = *solve(t, reach);
    const Mask need = ~t & full_atoms_;
    PointedElk model;
    Mask acc = 0;
    for (std::size_t i = 0; i < reach.size(); ++i) {
      for (std::size_t u = 0; u < representatives_.size(); ++u) {
        Mask bt = body_true_[u];
        if (reach[i] & t & ~bt) continue;
        Mask served = acc | (reach[i] & ~t & ~bt & full_atoms_);
        bool completes = false;
        for (Mask s = 0; s <= full_atoms_ && !completes; ++s) {
          completes = suffix[i + 1][s] && ((served | s) & need) == need;
        }
        if (completes) {
          acc = served;
          model.structure.worlds.push_back(compiler_->materialize(representatives_[u]));
          break;
        }
      }
    }
    for (std::size_t a = 0; a < agents_.size(); ++a) {
      const auto& rgs = choices[a][pick[a]];
      auto& rel = model.structure.relations[agents_[a]];
      for (std::size_t v = 0; v < rgs.size(); ++v) {
        for (std::size_t u = 0; u < rgs.size(); ++u) {
          if (rgs[v] == rgs[u]) rel.insert({static_cast<int>(v), static_cast<int>(u)});
        }
      }
    }
    result->verdict = BruteForceResult::Verdict::kSat;
    result->model = std::move(model);
  }

  BruteForceBounds bounds_;
  std::vector<std::string> agents_;
  std::vector<Atom> atoms_;
  std::vector<ElAxiom> axioms_;
  PropFormula skeleton_ = PropFormula::True();
  std::optional<Compiler> compiler_;
  std::vector<BitInterpretation> representatives_;
  std::vector<Mask> body_true_;
  Mask full_atoms_ = 0;
  std::vector<Mask> feasible_;
  std::map<std::pair<Mask, Mask>, std::vector<Mask>> options_;
  std::map<std::vector<Mask>, std::optional<Mask>> verdicts_;
};

}  // namespace

std::optional<ElInterpretation> brute_force_el_sat(const ElFormula& alpha, int max_domain) {
  Compiler compiler(signature(alpha));
  std::vector<ElAxiom> axioms = axioms_of(alpha);
  for (const auto& a : axioms) compiler.compile(a);
  std::optional<ElInterpretation> found;
  std::vector<Mask> regs;
  compiler.enumerate(max_domain, [&](const BitInterpretation& I) {
    if (!eval_body(alpha, axioms, compiler.evaluate(I, &regs))) return false;
    found = compiler.materialize(I);
    return true;
  });
  return found;
}

std::optional<ElInterpretation> brute_force_literals_sat(const std::vector<ElLiteral>& literals, int max_domain) {
  if (literals.empty()) return ElInterpretation{};
  return brute_force_el_sat(ElFormula::FromLiterals(literals), max_domain);
}

BruteForceResult brute_force_elk_sat(const ElkFormula& phi, BruteForceBounds bounds) {
  if (bounds.max_worlds < 1 || bounds.max_domain < 1) throw std::invalid_argument("brute-force bounds must be >= 1");
  return ElkSearch(phi, bounds).run();
}

BruteForceResult brute_force_elk_sat(const ConjunctiveElk& phi, BruteForceBounds bounds) {
  if (phi.omega0.empty() && phi.positives.empty() && phi.negatives.empty()) {
    BruteForceResult r;
    r.verdict = BruteForceResult::Verdict::kSat;
    r.model = PointedElk{ElkInterpretation{{ElInterpretation{}}, {}}, 0};
    return r;
  }
  return brute_force_elk_sat(render(phi), bounds);
}

namespace {

int flat_length(const AgentWord& sigma) {
  int n = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) n += (i == 0 || sigma[i] != sigma[i - 1]);
  return n;
}

int atom_depth(const ElkFormula& f) {
  switch (f.kind()) {
    case ElkFormula::Kind::kAx: return flat_length(f.prefix());
    case ElkFormula::Kind::kNot: return atom_depth(f.child());
    case ElkFormula::Kind::kAnd: return atom_depth(f.lhs()) + atom_depth(f.rhs());
  }
  return 0;
}

}  // namespace

int default_world_bound(const ConjunctiveElk& phi) {
  int n = 1;
  for (const auto& m : phi.negatives) n += flat_length(m.sigma);
  return n;
}

int default_world_bound(const ElkFormula& phi) { return 1 + atom_depth(phi); }

}  // namespace elkat
