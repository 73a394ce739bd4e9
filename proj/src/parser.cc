#include "elkat/parser.h"

#include <cctype>
#include <optional>
#include <sstream>

namespace elkat {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { kIdent, kAndAnd, kAmp, kBang, kLParen, kRParen, kComma, kDot, kLe, kLBracket, kRBracket, kLBrace, kRBrace, kEnd };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view text, int first_line) {
  std::vector<Token> out;
  int line = first_line;
  int col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string s, int width) {
    out.push_back({k, std::move(s), line, col});
    i += width;
    col += width;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (ident_char(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      push(Tok::kIdent, std::string(text.substr(i, j - i)), static_cast<int>(j - i));
      continue;
    }
    if (c == '&' && i + 1 < text.size() && text[i + 1] == '&') {
      push(Tok::kAndAnd, "&&", 2);
      continue;
    }
    if (c == '<' && i + 1 < text.size() && text[i + 1] == '=') {
      push(Tok::kLe, "<=", 2);
      continue;
    }
    switch (c) {
      case '&': push(Tok::kAmp, "&", 1); continue;
      case '!': push(Tok::kBang, "!", 1); continue;
      case '(': push(Tok::kLParen, "(", 1); continue;
      case ')': push(Tok::kRParen, ")", 1); continue;
      case ',': push(Tok::kComma, ",", 1); continue;
      case '.': push(Tok::kDot, ".", 1); continue;
      case '[': push(Tok::kLBracket, "[", 1); continue;
      case ']': push(Tok::kRBracket, "]", 1); continue;
      case '{': push(Tok::kLBrace, "{", 1); continue;
      case '}': push(Tok::kRBrace, "}", 1); continue;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }
  out.push_back({Tok::kEnd, "", line, col});
  return out;
}

bool is_keyword(const std::string& s) { return s == "Top" || s == "some" || s == "Bottom"; }

bool valid_name(const std::string& s) {
  return !s.empty() && !std::isdigit(static_cast<unsigned char>(s[0])) && !is_keyword(s);
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ElkFormula formula() {
    ElkFormula f = unit();
    while (accept(Tok::kAndAnd)) f = ElkFormula::And(f, unit());
    return f;
  }

  ElFormula el_formula() {
    ElFormula f = el_unit();
    while (accept(Tok::kAndAnd)) f = ElFormula::And(f, el_unit());
    return f;
  }

  ElAxiom axiom() {
    const Token& t = peek();
    if (t.kind == Tok::kIdent && peek(1).kind == Tok::kLParen) {
      std::string symbol = name("concept or role name");
      expect(Tok::kLParen, "'('");
      std::string first = name("individual name");
      if (accept(Tok::kComma)) {
        std::string second = name("individual name");
        expect(Tok::kRParen, "')'");
        return ElAxiom::RoleAssertion(symbol, first, second);
      }
      expect(Tok::kRParen, "')' or ','");
      return ElAxiom::ConceptAssertion(symbol, first);
    }
    Concept lhs = concept_expr();
    expect(Tok::kLe, "'<='");
    Concept rhs = concept_expr();
    return ElAxiom::Inclusion(lhs, rhs);
  }

  Concept concept_expr() {
    Concept c = cunit();
    while (accept(Tok::kAmp)) c = Concept::Conj(c, cunit());
    return c;
  }

  void expect_end() {
    if (peek().kind != Tok::kEnd) fail("unexpected '" + peek().text + "'");
  }

 private:
  ElkFormula unit() {
    if (accept(Tok::kBang)) return ElkFormula::Not(unit());
    if (peek().kind == Tok::kLParen) {
      if (auto ax = try_axiom()) return ElkFormula::Plain(*ax);
      expect(Tok::kLParen, "'('");
      ElkFormula f = formula();
      expect(Tok::kRParen, "')'");
      return f;
    }
    if (at_k_prefix()) {
      AgentWord prefix;
      while (at_k_prefix()) {
        pos_ += 2;
        const Token& a = peek();
        if (a.kind != Tok::kIdent) fail("expected agent identifier");
        prefix.push_back(a.text);
        ++pos_;
        expect(Tok::kRBracket, "']'");
      }
      return ElkFormula::Ax(std::move(prefix), el_unit());
    }
    return ElkFormula::Plain(axiom());
  }

  ElFormula el_unit() {
    if (accept(Tok::kBang)) return ElFormula::Not(el_unit());
    if (at_k_prefix()) throw FragmentError(where(peek()) + "K-prefix under negation or inside an EL formula body");
    if (peek().kind == Tok::kLParen) {
      if (auto ax = try_axiom()) return ElFormula::Lit(*ax);
      expect(Tok::kLParen, "'('");
      ElFormula f = el_formula();
      expect(Tok::kRParen, "')'");
      return f;
    }
    return ElFormula::Lit(axiom());
  }

  // An axiom whose left-hand concept starts with '('; backtracks on failure.
  std::optional<ElAxiom> try_axiom() {
    std::size_t saved = pos_;
    try {
      return axiom();
    } catch (const ParseError&) {
      pos_ = saved;
      return std::nullopt;
    }
  }

  Concept cunit() {
    const Token& t = peek();
    if (t.kind == Tok::kLBrace) throw FragmentError(where(t) + "nominals are not allowed in EL input");
    if (accept(Tok::kLParen)) {
      Concept c = concept_expr();
      expect(Tok::kRParen, "')'");
      return c;
    }
    if (t.kind != Tok::kIdent) fail("expected a concept");
    if (t.text == "Bottom") throw FragmentError(where(t) + "Bottom is not allowed in EL input");
    if (t.text == "Top") {
      ++pos_;
      return Concept::Top();
    }
    if (t.text == "some") {
      ++pos_;
      std::string role = name("role name");
      expect(Tok::kDot, "'.'");
      return Concept::Exists(role, cunit());
    }
    return Concept::Name(name("concept name"));
  }

  std::string name(const char* what) {
    const Token& t = peek();
    if (t.kind == Tok::kIdent && t.text == "Bottom") {
      throw FragmentError(where(t) + "Bottom is not allowed in EL input");
    }
    if (t.kind != Tok::kIdent || !valid_name(t.text)) fail(std::string("expected ") + what);
    ++pos_;
    return t.text;
  }

  bool at_k_prefix() const {
    return peek().kind == Tok::kIdent && peek().text == "K" && peek(1).kind == Tok::kLBracket;
  }

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  void expect(Tok k, const char* what) {
    if (!accept(k)) fail(std::string("expected ") + what);
  }

  static std::string where(const Token& t) {
    return std::to_string(t.line) + ":" + std::to_string(t.column) + ": ";
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    std::string got = t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'";
    throw ParseError(msg + ", got " + got, t.line, t.column);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::vector<std::pair<int, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (char c : line) blank = blank && std::isspace(static_cast<unsigned char>(c));
    if (!blank) out.emplace_back(n, line);
  }
  return out;
}

}  // namespace

ElkFormula parse_formula(std::string_view text) {
  Parser p(tokenize(text, 1));
  ElkFormula f = p.formula();
  p.expect_end();
  return f;
}

ElFormula parse_el_formula(std::string_view text) {
  Parser p(tokenize(text, 1));
  ElFormula f = p.el_formula();
  p.expect_end();
  return f;
}

ElAxiom parse_axiom(std::string_view text) {
  Parser p(tokenize(text, 1));
  ElAxiom a = p.axiom();
  p.expect_end();
  return a;
}

Concept parse_concept(std::string_view text) {
  Parser p(tokenize(text, 1));
  Concept c = p.concept_expr();
  p.expect_end();
  return c;
}

ElkFormula parse_formula_file(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty formula file", 1, 1);
  std::optional<ElkFormula> result;
  for (const auto& [n, line] : lines) {
    Parser p(tokenize(line, n));
    ElkFormula f = p.formula();
    p.expect_end();
    result = result ? ElkFormula::And(*result, f) : f;
  }
  return *result;
}

std::vector<ElAxiom> parse_ontology(std::string_view text) {
  std::vector<ElAxiom> out;
  for (const auto& [n, line] : content_lines(text)) {
    Parser p(tokenize(line, n));
    out.push_back(p.axiom());
    p.expect_end();
  }
  return out;
}

}  // namespace elkat
