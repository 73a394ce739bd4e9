#include "doctest.h"

#include "elkat/parser.h"
#include "elkat/syntax.h"

using namespace elkat;

namespace {

ElLiteral pos(const char* s) { return {parse_axiom(s), true}; }
ElLiteral neg(const char* s) { return {parse_axiom(s), false}; }

}  // namespace

TEST_CASE("parse inclusion with existential") {
  ElAxiom a = parse_axiom("Crepe <= some contains . Flour");
  CHECK(a == ElAxiom::Inclusion(Concept::Name("Crepe"), Concept::Exists("contains", Concept::Name("Flour"))));
  CHECK(parse_formula("Crepe <= some contains . Flour") == ElkFormula::Plain(a));
}

TEST_CASE("parse stacked K prefix over a parenthesised axiom") {
  ElkFormula f = parse_formula("K[1] K[2] (A <= B)");
  REQUIRE(f.kind() == ElkFormula::Kind::kAx);
  CHECK(f.prefix() == AgentWord{"1", "2"});
  CHECK(f.body() == ElFormula::Lit(parse_axiom("A <= B")));
  CHECK(parse_formula("K[1] K[2] A <= B") == f);
}

TEST_CASE("malformed input reports a position") {
  CHECK_THROWS_AS(parse_formula("A <= "), ParseError);
  try {
    parse_formula("A <= ");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 6);
  }
  CHECK_THROWS_AS(parse_formula("A(a"), ParseError);
  CHECK_THROWS_AS(parse_formula("A <= B &&"), ParseError);
  CHECK_THROWS_AS(parse_formula("K[] A(a)"), ParseError);
}

TEST_CASE("nominals and Bottom are rejected in input") {
  CHECK_THROWS_AS(parse_formula("{a} <= A"), FragmentError);
  CHECK_THROWS_AS(parse_formula("A <= Bottom"), FragmentError);
}

TEST_CASE("assertions") {
  CHECK(parse_axiom("BrazilianSinger(Caetano)") == ElAxiom::ConceptAssertion("BrazilianSinger", "Caetano"));
  CHECK(parse_axiom("r(a, b)") == ElAxiom::RoleAssertion("r", "a", "b"));
}

TEST_CASE("concept conjunction binds tighter than formula conjunction") {
  ElkFormula f = parse_formula("A & B <= C && !D(a)");
  REQUIRE(f.kind() == ElkFormula::Kind::kAnd);
  CHECK(f.lhs() == ElkFormula::Plain(ElAxiom::Inclusion(Concept::Conj(Concept::Name("A"), Concept::Name("B")),
                                                         Concept::Name("C"))));
  CHECK(f.rhs() == ElkFormula::Not(ElkFormula::Plain(ElAxiom::ConceptAssertion("D", "a"))));
}

TEST_CASE("formula files join lines and skip comments") {
  ElkFormula f = parse_formula_file("# header\nA(a)\n\nK[1] A <= B  # trailing\n");
  CHECK(f == parse_formula("A(a) && K[1] A <= B"));
  CHECK_THROWS_AS(parse_formula_file("# nothing\n"), ParseError);
  try {
    parse_formula_file("A(a)\nB <=\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("to_conjunctive splits the three parts") {
  ConjunctiveElk c = to_conjunctive(parse_formula("A(a) && K[1] A <= B && !K[2] B <= C"));
  CHECK(c.omega0 == std::vector<ElLiteral>{pos("A(a)")});
  REQUIRE(c.positives.size() == 1);
  CHECK(c.positives[0].sigma == AgentWord{"1"});
  CHECK(c.positives[0].body == std::vector<ElLiteral>{pos("A <= B")});
  REQUIRE(c.negatives.size() == 1);
  CHECK(c.negatives[0].sigma == AgentWord{"2"});
  CHECK(c.negatives[0].body == std::vector<ElLiteral>{pos("B <= C")});
}

TEST_CASE("to_conjunctive rejects alternation and non-literal bodies") {
  CHECK_THROWS_AS(to_conjunctive(parse_formula("!K[1] (!K[2] A <= B)")), FragmentError);
  CHECK_THROWS_AS(to_conjunctive(parse_formula("!(A(a) && B(a))")), FragmentError);
  CHECK_THROWS_AS(to_conjunctive(parse_formula("K[1] !(A(a) && B(a))")), FragmentError);
}

TEST_CASE("a lone negated inclusion lands in omega0") {
  ConjunctiveElk c = to_conjunctive(parse_formula("!(A <= B)"));
  CHECK(c.omega0 == std::vector<ElLiteral>{neg("A <= B")});
  CHECK(c.positives.empty());
  CHECK(c.negatives.empty());
}

TEST_CASE("signature") {
  auto onto = parse_ontology(
      "BrazilianSinger(Caetano)\nBossaNova <= BrazilianMusicStyle\nViolaBuriti <= some madeFrom . Buriti\n");
  Signature s = signature(onto);
  CHECK(s.individuals.count("Caetano"));
  CHECK(s.roles == std::set<std::string>{"madeFrom"});
  CHECK(signature(Concept::Top()).empty());
  Signature e = signature(Concept::Exists("r", Concept::Nominal("a")));
  CHECK(e.roles == std::set<std::string>{"r"});
  CHECK(e.individuals == std::set<std::string>{"a"});
  CHECK(e.concepts.empty());
  CHECK(signature(parse_formula("K[1] K[2] A(a)")).agents == std::set<std::string>{"1", "2"});
}

TEST_CASE("printing is canonical") {
  for (const char* s : {"A & B <= some r . (C & D)", "K[1] K[2] A(a) && !(r(a, b))", "Top <= A & (B & C)",
                        "K[1] (A(a) && !(B(a)))", "some r . some s . Top <= A"}) {
    ElkFormula f = parse_formula(s);
    CHECK(parse_formula(to_string(f)) == f);
    CHECK(to_string(parse_formula(to_string(f))) == to_string(f));
  }
}
