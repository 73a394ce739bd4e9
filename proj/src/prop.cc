#include "elkat/prop.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace elkat {

struct PropFormula::Node {
  Kind kind;
  int var;
  PropFormula a;
  PropFormula b;
  std::size_t size;
  int num_vars;
};

PropFormula PropFormula::True() {
  static const auto n = std::make_shared<const Node>(Node{Kind::kTrue, -1, PropFormula(nullptr), PropFormula(nullptr), 1, 0});
  return PropFormula(n);
}

PropFormula PropFormula::False() {
  static const auto n =
      std::make_shared<const Node>(Node{Kind::kFalse, -1, PropFormula(nullptr), PropFormula(nullptr), 1, 0});
  return PropFormula(n);
}

PropFormula PropFormula::Var(int index) {
  if (index < 0) throw std::invalid_argument("negative propositional variable");
  return PropFormula(std::make_shared<const Node>(
      Node{Kind::kVar, index, PropFormula(nullptr), PropFormula(nullptr), 1, index + 1}));
}

PropFormula PropFormula::Not(PropFormula child) {
  auto size = child.size() + 1;
  auto nv = child.num_vars();
  return PropFormula(std::make_shared<const Node>(Node{Kind::kNot, -1, std::move(child), PropFormula(nullptr), size, nv}));
}

PropFormula PropFormula::And(PropFormula lhs, PropFormula rhs) {
  auto size = lhs.size() + rhs.size() + 1;
  auto nv = std::max(lhs.num_vars(), rhs.num_vars());
  return PropFormula(std::make_shared<const Node>(
      Node{Kind::kAnd, -1, std::move(lhs), std::move(rhs), size, nv}));
}

PropFormula PropFormula::Or(PropFormula lhs, PropFormula rhs) {
  auto size = lhs.size() + rhs.size() + 1;
  auto nv = std::max(lhs.num_vars(), rhs.num_vars());
  return PropFormula(std::make_shared<const Node>(Node{Kind::kOr, -1, std::move(lhs), std::move(rhs), size, nv}));
}

PropFormula PropFormula::Implies(PropFormula lhs, PropFormula rhs) {
  auto size = lhs.size() + rhs.size() + 1;
  auto nv = std::max(lhs.num_vars(), rhs.num_vars());
  return PropFormula(
      std::make_shared<const Node>(Node{Kind::kImplies, -1, std::move(lhs), std::move(rhs), size, nv}));
}

PropFormula::Kind PropFormula::kind() const { return node_->kind; }
int PropFormula::var() const { return node_->var; }
const PropFormula& PropFormula::child() const { return node_->a; }
const PropFormula& PropFormula::lhs() const { return node_->a; }
const PropFormula& PropFormula::rhs() const { return node_->b; }
std::size_t PropFormula::size() const { return node_->size; }
int PropFormula::num_vars() const { return node_->num_vars; }

bool PropFormula::eval(const std::vector<bool>& v) const {
  switch (kind()) {
    case Kind::kTrue: return true;
    case Kind::kFalse: return false;
    case Kind::kVar: return v.at(var());
    case Kind::kNot: return !child().eval(v);
    case Kind::kAnd: return lhs().eval(v) && rhs().eval(v);
    case Kind::kOr: return lhs().eval(v) || rhs().eval(v);
    case Kind::kImplies: return !lhs().eval(v) || rhs().eval(v);
  }
  return false;
}

bool PropFormula::eval_bits(std::uint64_t bits) const {
  switch (kind()) {
    case Kind::kTrue: return true;
    case Kind::kFalse: return false;
    case Kind::kVar: return (bits >> var()) & 1u;
    case Kind::kNot: return !child().eval_bits(bits);
    case Kind::kAnd: return lhs().eval_bits(bits) && rhs().eval_bits(bits);
    case Kind::kOr: return lhs().eval_bits(bits) || rhs().eval_bits(bits);
    case Kind::kImplies: return !lhs().eval_bits(bits) || rhs().eval_bits(bits);
  }
  return false;
}

std::optional<bool> PropFormula::eval_partial(const std::vector<std::optional<bool>>& v) const {
  switch (kind()) {
    case Kind::kTrue: return true;
    case Kind::kFalse: return false;
    case Kind::kVar: return v.at(var());
    case Kind::kNot: {
      auto c = child().eval_partial(v);
      if (!c) return std::nullopt;
      return !*c;
    }
    case Kind::kAnd: {
      auto l = lhs().eval_partial(v);
      if (l == false) return false;
      auto r = rhs().eval_partial(v);
      if (r == false) return false;
      if (l && r) return true;
      return std::nullopt;
    }
    case Kind::kOr: {
      auto l = lhs().eval_partial(v);
      if (l == true) return true;
      auto r = rhs().eval_partial(v);
      if (r == true) return true;
      if (l && r) return false;
      return std::nullopt;
    }
    case Kind::kImplies: {
      auto l = lhs().eval_partial(v);
      if (l == false) return true;
      auto r = rhs().eval_partial(v);
      if (r == true) return true;
      if (l && r) return false;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool operator==(const PropFormula& a, const PropFormula& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const PropFormula& a, const PropFormula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case PropFormula::Kind::kTrue:
    case PropFormula::Kind::kFalse:
      return std::strong_ordering::equal;
    case PropFormula::Kind::kVar:
      return a.var() <=> b.var();
    case PropFormula::Kind::kNot:
      return a.child() <=> b.child();
    default:
      if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
      return a.rhs() <=> b.rhs();
  }
}

int PropVocabulary::intern(const std::string& name) {
  int i = find(name);
  if (i >= 0) return i;
  names_.push_back(name);
  return size() - 1;
}

int PropVocabulary::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

namespace {

void print(std::string* out, const PropFormula& f, const PropVocabulary& vocab, int parent_prec) {
  // precedence: implies 1, or 2, and 3, unary 4
  auto binary = [&](const char* op, int prec, bool right_assoc) {
    bool paren = prec < parent_prec;
    if (paren) *out += '(';
    print(out, f.lhs(), vocab, right_assoc ? prec + 1 : prec);
    *out += op;
    print(out, f.rhs(), vocab, right_assoc ? prec : prec + 1);
    if (paren) *out += ')';
  };
  switch (f.kind()) {
    case PropFormula::Kind::kTrue: *out += "true"; return;
    case PropFormula::Kind::kFalse: *out += "false"; return;
    case PropFormula::Kind::kVar: *out += vocab.name(f.var()); return;
    case PropFormula::Kind::kNot:
      *out += '~';
      print(out, f.child(), vocab, 4);
      return;
    case PropFormula::Kind::kAnd: binary(" & ", 3, false); return;
    case PropFormula::Kind::kOr: binary(" | ", 2, false); return;
    case PropFormula::Kind::kImplies: binary(" -> ", 1, true); return;
  }
}

class PropParser {
 public:
  PropParser(std::string_view text, PropVocabulary* vocab) : s_(text), vocab_(vocab) {}

  PropFormula parse() {
    PropFormula f = impl();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return f;
  }

 private:
  PropFormula impl() {
    PropFormula l = disj();
    skip();
    if (s_.substr(i_, 2) == "->") {
      i_ += 2;
      return PropFormula::Implies(l, impl());
    }
    return l;
  }

  PropFormula disj() {
    PropFormula f = conj();
    while (eat('|')) f = PropFormula::Or(f, conj());
    return f;
  }

  PropFormula conj() {
    PropFormula f = lit();
    while (eat('&')) f = PropFormula::And(f, lit());
    return f;
  }

  PropFormula lit() {
    if (eat('~')) return PropFormula::Not(lit());
    if (eat('(')) {
      PropFormula f = impl();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    skip();
    std::size_t j = i_;
    while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
    if (j == i_) fail("expected a variable");
    std::string name(s_.substr(i_, j - i_));
    i_ = j;
    if (name == "true") return PropFormula::True();
    if (name == "false") return PropFormula::False();
    return PropFormula::Var(vocab_->intern(name));
  }

  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("propositional formula, column " + std::to_string(i_ + 1) + ": " + msg);
  }

  std::string_view s_;
  PropVocabulary* vocab_;
  std::size_t i_ = 0;
};

}  // namespace

std::string to_string(const PropFormula& f, const PropVocabulary& vocab) {
  std::string out;
  print(&out, f, vocab, 0);
  return out;
}

PropFormula parse_prop(std::string_view text, PropVocabulary* vocab) { return PropParser(text, vocab).parse(); }

bool prop_satisfiable(const std::vector<PropFormula>& formulas, int num_vars) {
  if (num_vars > kMaxTruthTableVars) throw std::invalid_argument("truth table over too many variables");
  const std::uint64_t rows = std::uint64_t{1} << num_vars;
  for (std::uint64_t bits = 0; bits < rows; ++bits) {
    bool all = std::all_of(formulas.begin(), formulas.end(), [&](const PropFormula& f) { return f.eval_bits(bits); });
    if (all) return true;
  }
  return false;
}

bool prop_entails(const std::vector<PropFormula>& theory, const PropFormula& x, int num_vars) {
  if (num_vars > kMaxTruthTableVars) throw std::invalid_argument("truth table over too many variables");
  const std::uint64_t rows = std::uint64_t{1} << num_vars;
  for (std::uint64_t bits = 0; bits < rows; ++bits) {
    if (x.eval_bits(bits)) continue;
    bool all = std::all_of(theory.begin(), theory.end(), [&](const PropFormula& f) { return f.eval_bits(bits); });
    if (all) return false;
  }
  return true;
}

}  // namespace elkat
