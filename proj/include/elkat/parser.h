// Text front end for the ASCII formula grammar:
//
//   formula := conj ;  conj := unit { "&&" unit }
//   unit    := "!" unit | kax | "(" formula ")"
//   kax     := { "K[" AGENT "]" } axiom          (no prefix)
//            | "K[" AGENT "]" { "K[" AGENT "]" } elunit
//   elunit  := "!" elunit | "(" elformula ")" | axiom
//   axiom   := concept "<=" concept | NAME "(" NAME ")" | NAME "(" NAME "," NAME ")"
//   concept := cunit { "&" cunit }
//   cunit   := "Top" | NAME | "some" NAME "." cunit | "(" concept ")"
//
// Comments start with '#'. Files hold one formula or one conjunct per line.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "elkat/syntax.h"

namespace elkat {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

ElkFormula parse_formula(std::string_view text);
ElFormula parse_el_formula(std::string_view text);
ElAxiom parse_axiom(std::string_view text);
Concept parse_concept(std::string_view text);

// A formula file: every non-empty line (after stripping comments) is a
// conjunct; the conjuncts are joined left to right.
ElkFormula parse_formula_file(std::string_view text);

// An ontology file: one EL axiom per line.
std::vector<ElAxiom> parse_ontology(std::string_view text);

}  // namespace elkat
