#include "elkat/syntax.h"

#include <algorithm>
#include <sstream>
#include <utility>

namespace elkat {

// {{{ Concept

struct Concept::Node {
  Kind kind;
  std::string name;
  Concept a;
  Concept b;
  std::size_t size;
};

Concept::Concept() : Concept(Top()) {}

Concept Concept::Top() {
  static const auto node = std::make_shared<const Node>(Node{Kind::kTop, "", Concept(nullptr), Concept(nullptr), 1});
  return Concept(node);
}

Concept Concept::Bottom() {
  static const auto node =
      std::make_shared<const Node>(Node{Kind::kBottom, "", Concept(nullptr), Concept(nullptr), 1});
  return Concept(node);
}

Concept Concept::Name(std::string name) {
  return Concept(std::make_shared<const Node>(
      Node{Kind::kName, std::move(name), Concept(nullptr), Concept(nullptr), 1}));
}

Concept Concept::Nominal(std::string individual) {
  return Concept(std::make_shared<const Node>(
      Node{Kind::kNominal, std::move(individual), Concept(nullptr), Concept(nullptr), 1}));
}

Concept Concept::Conj(Concept lhs, Concept rhs) {
  std::size_t n = 1 + lhs.size() + rhs.size();
  return Concept(std::make_shared<const Node>(Node{Kind::kConj, "", std::move(lhs), std::move(rhs), n}));
}

Concept Concept::Exists(std::string role, Concept filler) {
  std::size_t n = 1 + filler.size();
  return Concept(std::make_shared<const Node>(
      Node{Kind::kExists, std::move(role), std::move(filler), Concept(nullptr), n}));
}

Concept::Kind Concept::kind() const { return node_->kind; }
const std::string& Concept::name() const { return node_->name; }
const Concept& Concept::lhs() const { return node_->a; }
const Concept& Concept::rhs() const { return node_->b; }
const Concept& Concept::filler() const { return node_->a; }
std::size_t Concept::size() const { return node_->size; }

bool operator==(const Concept& a, const Concept& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Concept::Kind::kTop:
    case Concept::Kind::kBottom:
      return std::strong_ordering::equal;
    case Concept::Kind::kName:
    case Concept::Kind::kNominal:
      return a.name() <=> b.name();
    case Concept::Kind::kConj:
      if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
      return a.rhs() <=> b.rhs();
    case Concept::Kind::kExists:
      if (auto c = a.name() <=> b.name(); c != 0) return c;
      return a.filler() <=> b.filler();
  }
  return std::strong_ordering::equal;
}

// }}}

// {{{ ElAxiom

ElAxiom ElAxiom::Inclusion(Concept lhs, Concept rhs) {
  ElAxiom a;
  a.kind = Kind::kInclusion;
  a.lhs = std::move(lhs);
  a.rhs = std::move(rhs);
  return a;
}

ElAxiom ElAxiom::ConceptAssertion(std::string concept_name, std::string individual) {
  ElAxiom a;
  a.kind = Kind::kConceptAssertion;
  a.symbol = std::move(concept_name);
  a.first = std::move(individual);
  return a;
}

ElAxiom ElAxiom::RoleAssertion(std::string role, std::string from, std::string to) {
  ElAxiom a;
  a.kind = Kind::kRoleAssertion;
  a.symbol = std::move(role);
  a.first = std::move(from);
  a.second = std::move(to);
  return a;
}

std::size_t ElAxiom::size() const {
  switch (kind) {
    case Kind::kInclusion:
      return lhs.size() + rhs.size() + 1;
    case Kind::kConceptAssertion:
      return 2;
    case Kind::kRoleAssertion:
      return 3;
  }
  return 0;
}

// }}}

// {{{ ElFormula

struct ElFormula::Node {
  Kind kind;
  ElAxiom axiom;
  ElFormula a;
  ElFormula b;
};

ElFormula ElFormula::Lit(ElAxiom axiom) {
  return ElFormula(std::make_shared<const Node>(
      Node{Kind::kLit, std::move(axiom), ElFormula(nullptr), ElFormula(nullptr)}));
}

ElFormula ElFormula::Not(ElFormula child) {
  return ElFormula(
      std::make_shared<const Node>(Node{Kind::kNot, {}, std::move(child), ElFormula(nullptr)}));
}

ElFormula ElFormula::And(ElFormula lhs, ElFormula rhs) {
  return ElFormula(std::make_shared<const Node>(Node{Kind::kAnd, {}, std::move(lhs), std::move(rhs)}));
}

ElFormula ElFormula::FromLiterals(const std::vector<ElLiteral>& literals) {
  if (literals.empty()) throw std::invalid_argument("FromLiterals: empty literal list");
  auto lit = [](const ElLiteral& l) {
    auto f = Lit(l.axiom);
    return l.positive ? f : Not(f);
  };
  ElFormula f = lit(literals.front());
  for (std::size_t i = 1; i < literals.size(); ++i) f = And(f, lit(literals[i]));
  return f;
}

ElFormula::Kind ElFormula::kind() const { return node_->kind; }
const ElAxiom& ElFormula::axiom() const { return node_->axiom; }
const ElFormula& ElFormula::child() const { return node_->a; }
const ElFormula& ElFormula::lhs() const { return node_->a; }
const ElFormula& ElFormula::rhs() const { return node_->b; }

bool operator==(const ElFormula& a, const ElFormula& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const ElFormula& a, const ElFormula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case ElFormula::Kind::kLit:
      return a.axiom() <=> b.axiom();
    case ElFormula::Kind::kNot:
      return a.child() <=> b.child();
    case ElFormula::Kind::kAnd:
      if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
      return a.rhs() <=> b.rhs();
  }
  return std::strong_ordering::equal;
}

// }}}

// {{{ ElkFormula

struct ElkFormula::Node {
  Kind kind;
  AgentWord prefix;
  std::vector<ElFormula> body;  // zero or one element
  ElkFormula a;
  ElkFormula b;
};

ElkFormula ElkFormula::Ax(AgentWord prefix, ElFormula body) {
  if (prefix.empty() && body.kind() == ElFormula::Kind::kNot) return Not(Ax({}, body.child()));
  if (prefix.empty() && body.kind() == ElFormula::Kind::kAnd) return And(Ax({}, body.lhs()), Ax({}, body.rhs()));
  return ElkFormula(std::make_shared<const Node>(Node{Kind::kAx, std::move(prefix),
                                                      std::vector<ElFormula>{std::move(body)},
                                                      ElkFormula(nullptr), ElkFormula(nullptr)}));
}

ElkFormula ElkFormula::Not(ElkFormula child) {
  return ElkFormula(
      std::make_shared<const Node>(Node{Kind::kNot, {}, {}, std::move(child), ElkFormula(nullptr)}));
}

ElkFormula ElkFormula::And(ElkFormula lhs, ElkFormula rhs) {
  return ElkFormula(std::make_shared<const Node>(Node{Kind::kAnd, {}, {}, std::move(lhs), std::move(rhs)}));
}

ElkFormula::Kind ElkFormula::kind() const { return node_->kind; }
const AgentWord& ElkFormula::prefix() const { return node_->prefix; }
const ElFormula& ElkFormula::body() const { return node_->body.front(); }
const ElkFormula& ElkFormula::child() const { return node_->a; }
const ElkFormula& ElkFormula::lhs() const { return node_->a; }
const ElkFormula& ElkFormula::rhs() const { return node_->b; }

bool operator==(const ElkFormula& a, const ElkFormula& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const ElkFormula& a, const ElkFormula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case ElkFormula::Kind::kAx:
      if (auto c = a.prefix() <=> b.prefix(); c != 0) return c;
      return a.body() <=> b.body();
    case ElkFormula::Kind::kNot:
      return a.child() <=> b.child();
    case ElkFormula::Kind::kAnd:
      if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
      return a.rhs() <=> b.rhs();
  }
  return std::strong_ordering::equal;
}

// }}}

// {{{ Fragment helpers

namespace {

void collect_literals(const ElFormula& f, std::vector<ElLiteral>* out, bool* ok) {
  switch (f.kind()) {
    case ElFormula::Kind::kLit:
      out->push_back({f.axiom(), true});
      return;
    case ElFormula::Kind::kNot:
      if (f.child().kind() == ElFormula::Kind::kLit) {
        out->push_back({f.child().axiom(), false});
      } else {
        *ok = false;
      }
      return;
    case ElFormula::Kind::kAnd:
      collect_literals(f.lhs(), out, ok);
      collect_literals(f.rhs(), out, ok);
      return;
  }
}

void collect_conjuncts(const ElkFormula& f, std::vector<ElkFormula>* out) {
  if (f.kind() == ElkFormula::Kind::kAnd) {
    collect_conjuncts(f.lhs(), out);
    collect_conjuncts(f.rhs(), out);
  } else {
    out->push_back(f);
  }
}

}  // namespace

std::vector<ElLiteral> literal_conjunction(const ElFormula& f) {
  std::vector<ElLiteral> out;
  bool ok = true;
  collect_literals(f, &out, &ok);
  if (!ok) throw FragmentError("not a conjunction of EL literals: " + to_string(f));
  return out;
}

bool is_literal_conjunction(const ElFormula& f) {
  std::vector<ElLiteral> out;
  bool ok = true;
  collect_literals(f, &out, &ok);
  return ok;
}

std::vector<ElAxiom> axioms_of(const ElFormula& f) {
  std::vector<ElAxiom> out;
  std::set<ElAxiom> seen;
  auto rec = [&](auto&& self, const ElFormula& g) -> void {
    switch (g.kind()) {
      case ElFormula::Kind::kLit:
        if (seen.insert(g.axiom()).second) out.push_back(g.axiom());
        return;
      case ElFormula::Kind::kNot:
        self(self, g.child());
        return;
      case ElFormula::Kind::kAnd:
        self(self, g.lhs());
        self(self, g.rhs());
        return;
    }
  };
  rec(rec, f);
  return out;
}

ConjunctiveElk to_conjunctive(const ElkFormula& phi) {
  std::vector<ElkFormula> conjuncts;
  collect_conjuncts(phi, &conjuncts);
  ConjunctiveElk out;
  auto body_literals = [](const ElFormula& body, const ElkFormula& where) {
    if (!is_literal_conjunction(body)) {
      throw FragmentError("body is not a conjunction of EL literals in: " + to_string(where));
    }
    return literal_conjunction(body);
  };
  for (const auto& c : conjuncts) {
    if (c.kind() == ElkFormula::Kind::kAx) {
      auto lits = body_literals(c.body(), c);
      if (c.prefix().empty()) {
        out.omega0.insert(out.omega0.end(), lits.begin(), lits.end());
      } else {
        out.positives.push_back({c.prefix(), std::move(lits)});
      }
      continue;
    }
    // c is a negation
    const ElkFormula& inner = c.child();
    if (inner.kind() != ElkFormula::Kind::kAx) {
      throw FragmentError("negation of a compound ELK formula: " + to_string(c));
    }
    if (inner.prefix().empty()) {
      if (inner.body().kind() != ElFormula::Kind::kLit) {
        throw FragmentError("negation over a non-atomic EL formula: " + to_string(c));
      }
      out.omega0.push_back({inner.body().axiom(), false});
    } else {
      out.negatives.push_back({inner.prefix(), body_literals(inner.body(), c)});
    }
  }
  return out;
}

ElkFormula render(const ConjunctiveElk& phi) {
  std::vector<ElkFormula> parts;
  for (const auto& l : phi.omega0) {
    auto ax = ElkFormula::Plain(l.axiom);
    parts.push_back(l.positive ? ax : ElkFormula::Not(ax));
  }
  for (const auto& p : phi.positives) parts.push_back(ElkFormula::Ax(p.sigma, ElFormula::FromLiterals(p.body)));
  for (const auto& n : phi.negatives) {
    parts.push_back(ElkFormula::Not(ElkFormula::Ax(n.sigma, ElFormula::FromLiterals(n.body))));
  }
  if (parts.empty()) throw std::invalid_argument("render: empty conjunctive formula");
  ElkFormula f = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) f = ElkFormula::And(f, parts[i]);
  return f;
}

// }}}

// {{{ Signature

void Signature::merge(const Signature& o) {
  concepts.insert(o.concepts.begin(), o.concepts.end());
  roles.insert(o.roles.begin(), o.roles.end());
  individuals.insert(o.individuals.begin(), o.individuals.end());
  agents.insert(o.agents.begin(), o.agents.end());
}

bool Signature::includes(const Signature& o) const {
  auto sub = [](const std::set<std::string>& big, const std::set<std::string>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  return sub(concepts, o.concepts) && sub(roles, o.roles) && sub(individuals, o.individuals) &&
         sub(agents, o.agents);
}

namespace {

void add(Signature* s, const Concept& c) {
  switch (c.kind()) {
    case Concept::Kind::kTop:
    case Concept::Kind::kBottom:
      return;
    case Concept::Kind::kName:
      s->concepts.insert(c.name());
      return;
    case Concept::Kind::kNominal:
      s->individuals.insert(c.name());
      return;
    case Concept::Kind::kConj:
      add(s, c.lhs());
      add(s, c.rhs());
      return;
    case Concept::Kind::kExists:
      s->roles.insert(c.name());
      add(s, c.filler());
      return;
  }
}

void add(Signature* s, const ElAxiom& a) {
  switch (a.kind) {
    case ElAxiom::Kind::kInclusion:
      add(s, a.lhs);
      add(s, a.rhs);
      return;
    case ElAxiom::Kind::kConceptAssertion:
      s->concepts.insert(a.symbol);
      s->individuals.insert(a.first);
      return;
    case ElAxiom::Kind::kRoleAssertion:
      s->roles.insert(a.symbol);
      s->individuals.insert(a.first);
      s->individuals.insert(a.second);
      return;
  }
}

void add(Signature* s, const ElFormula& f) {
  switch (f.kind()) {
    case ElFormula::Kind::kLit:
      add(s, f.axiom());
      return;
    case ElFormula::Kind::kNot:
      add(s, f.child());
      return;
    case ElFormula::Kind::kAnd:
      add(s, f.lhs());
      add(s, f.rhs());
      return;
  }
}

void add(Signature* s, const ElkFormula& f) {
  switch (f.kind()) {
    case ElkFormula::Kind::kAx:
      s->agents.insert(f.prefix().begin(), f.prefix().end());
      add(s, f.body());
      return;
    case ElkFormula::Kind::kNot:
      add(s, f.child());
      return;
    case ElkFormula::Kind::kAnd:
      add(s, f.lhs());
      add(s, f.rhs());
      return;
  }
}

}  // namespace

Signature signature(const Concept& c) {
  Signature s;
  add(&s, c);
  return s;
}

Signature signature(const ElAxiom& a) {
  Signature s;
  add(&s, a);
  return s;
}

Signature signature(const ElLiteral& l) { return signature(l.axiom); }

Signature signature(const ElFormula& f) {
  Signature s;
  add(&s, f);
  return s;
}

Signature signature(const ElkFormula& f) {
  Signature s;
  add(&s, f);
  return s;
}

Signature signature(const ConjunctiveElk& f) {
  Signature s;
  for (const auto& l : f.omega0) add(&s, l.axiom);
  for (const auto* list : {&f.positives, &f.negatives}) {
    for (const auto& m : *list) {
      s.agents.insert(m.sigma.begin(), m.sigma.end());
      for (const auto& l : m.body) add(&s, l.axiom);
    }
  }
  return s;
}

Signature signature(const std::vector<ElAxiom>& axioms) {
  Signature s;
  for (const auto& a : axioms) add(&s, a);
  return s;
}

Signature signature(const std::vector<ElLiteral>& literals) {
  Signature s;
  for (const auto& l : literals) add(&s, l.axiom);
  return s;
}

// }}}

// {{{ Printing

namespace {

void print(std::ostream& os, const Concept& c);

void print_unit(std::ostream& os, const Concept& c) {
  if (c.kind() == Concept::Kind::kConj) {
    os << '(';
    print(os, c);
    os << ')';
  } else {
    print(os, c);
  }
}

void print(std::ostream& os, const Concept& c) {
  switch (c.kind()) {
    case Concept::Kind::kTop:
      os << "Top";
      return;
    case Concept::Kind::kBottom:
      os << "Bottom";
      return;
    case Concept::Kind::kName:
      os << c.name();
      return;
    case Concept::Kind::kNominal:
      os << '{' << c.name() << '}';
      return;
    case Concept::Kind::kConj:
      // Conjunction parses left-associatively.
      print(os, c.lhs());
      os << " & ";
      print_unit(os, c.rhs());
      return;
    case Concept::Kind::kExists:
      os << "some " << c.name() << " . ";
      print_unit(os, c.filler());
      return;
  }
}

void print(std::ostream& os, const ElAxiom& a) {
  switch (a.kind) {
    case ElAxiom::Kind::kInclusion:
      print(os, a.lhs);
      os << " <= ";
      print(os, a.rhs);
      return;
    case ElAxiom::Kind::kConceptAssertion:
      os << a.symbol << '(' << a.first << ')';
      return;
    case ElAxiom::Kind::kRoleAssertion:
      os << a.symbol << '(' << a.first << ", " << a.second << ')';
      return;
  }
}

void print(std::ostream& os, const ElFormula& f);

void print_unit(std::ostream& os, const ElFormula& f) {
  switch (f.kind()) {
    case ElFormula::Kind::kLit:
      print(os, f.axiom());
      return;
    case ElFormula::Kind::kNot:
      os << '!';
      if (f.child().kind() == ElFormula::Kind::kNot) {
        print_unit(os, f.child());
      } else {
        os << '(';
        print(os, f.child());
        os << ')';
      }
      return;
    case ElFormula::Kind::kAnd:
      os << '(';
      print(os, f);
      os << ')';
      return;
  }
}

void print(std::ostream& os, const ElFormula& f) {
  if (f.kind() == ElFormula::Kind::kAnd) {
    print(os, f.lhs());
    os << " && ";
    print_unit(os, f.rhs());
  } else {
    print_unit(os, f);
  }
}

void print(std::ostream& os, const ElkFormula& f);

void print_unit(std::ostream& os, const ElkFormula& f) {
  switch (f.kind()) {
    case ElkFormula::Kind::kAx:
      for (const auto& a : f.prefix()) os << "K[" << a << "] ";
      if (f.body().kind() == ElFormula::Kind::kLit) {
        print(os, f.body().axiom());
      } else {
        print_unit(os, f.body());
      }
      return;
    case ElkFormula::Kind::kNot:
      os << '!';
      if (f.child().kind() == ElkFormula::Kind::kNot) {
        print_unit(os, f.child());
      } else {
        os << '(';
        print(os, f.child());
        os << ')';
      }
      return;
    case ElkFormula::Kind::kAnd:
      os << '(';
      print(os, f);
      os << ')';
      return;
  }
}

void print(std::ostream& os, const ElkFormula& f) {
  if (f.kind() == ElkFormula::Kind::kAnd) {
    print(os, f.lhs());
    os << " && ";
    print_unit(os, f.rhs());
  } else {
    print_unit(os, f);
  }
}

template <typename T>
std::string render_text(const T& x) {
  std::ostringstream os;
  print(os, x);
  return os.str();
}

}  // namespace

std::string to_string(const Concept& c) { return render_text(c); }
std::string to_string(const ElAxiom& a) { return render_text(a); }
std::string to_string(const ElFormula& f) { return render_text(f); }
std::string to_string(const ElkFormula& f) { return render_text(f); }

std::string to_string(const ElLiteral& l) {
  return l.positive ? to_string(l.axiom) : "!(" + to_string(l.axiom) + ")";
}

std::string to_string(const AgentWord& w) {
  std::string s;
  for (const auto& a : w) s += "K[" + a + "]";
  return s.empty() ? "eps" : s;
}

std::string to_string(const ConjunctiveElk& f) {
  bool any = !f.omega0.empty() || !f.positives.empty() || !f.negatives.empty();
  return any ? to_string(render(f)) : "Top <= Top";
}

std::ostream& operator<<(std::ostream& os, const Concept& c) { return os << to_string(c); }
std::ostream& operator<<(std::ostream& os, const ElAxiom& a) { return os << to_string(a); }
std::ostream& operator<<(std::ostream& os, const ElLiteral& l) { return os << to_string(l); }
std::ostream& operator<<(std::ostream& os, const ElFormula& f) { return os << to_string(f); }
std::ostream& operator<<(std::ostream& os, const ElkFormula& f) { return os << to_string(f); }

// }}}

}  // namespace elkat
