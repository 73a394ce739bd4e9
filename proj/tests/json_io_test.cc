#include "doctest.h"

#include "elkat/elk_sat.h"
#include "elkat/json_io.h"
#include "elkat/parser.h"
#include "support/generators.h"

using namespace elkat;
using namespace elkat::testing;

TEST_CASE("interpretation JSON layout") {
  ElInterpretation I;
  I.domain_size = 2;
  I.concepts["A"] = {1};
  I.roles["r"] = {{0, 1}};
  I.individuals["a"] = 0;
  Json j = to_json(I);
  CHECK(j["domain"] == Json::array({0, 1}));
  CHECK(j["concepts"]["A"] == Json::array({1}));
  CHECK(j["roles"]["r"] == Json::parse("[[0, 1]]"));
  CHECK(j["individuals"]["a"] == 0);
}

TEST_CASE("random Kripke structures survive a JSON round trip") {
  Rng rng(31);
  Vocabulary voc;
  for (int i = 0; i < 200; ++i) {
    PointedElk m = random_kripke(rng, voc, uniform(rng, 1, 4), uniform(rng, 1, 3));
    CHECK(pointed_elk_from_json(Json::parse(to_json(m).dump())) == m);
  }
}

TEST_CASE("witness JSON round trip keeps the model a model") {
  auto phi = to_conjunctive(parse_formula("A(a) && K[1] K[2] A <= B && !K[2] B(a)"));
  auto v = conjunctive_sat(phi, true);
  REQUIRE(v.witness);
  CHECK(check_elk(pointed_elk_from_json(to_json(*v.witness)), phi));
  Json verdict = to_json(v);
  CHECK(verdict["sat"] == true);
  CHECK(verdict["failing_check"].is_null());
}

TEST_CASE("malformed JSON structures are rejected") {
  CHECK_THROWS_AS(el_interpretation_from_json(Json::parse(R"({"domain": []})")), MalformedStructure);
  CHECK_THROWS_AS(el_interpretation_from_json(Json::parse(R"({"domain": [0, 2]})")), MalformedStructure);
  CHECK_THROWS_AS(el_interpretation_from_json(Json::parse(R"({"domain": [0], "concepts": {"A": [3]}})")),
                  InterpretationError);
  CHECK_THROWS_AS(pointed_elk_from_json(Json::parse(
                      R"({"worlds": [{"domain": [0]}, {"domain": [0]}], "relations": {"1": [[0, 1]]}, "point": 0})")),
                  MalformedStructure);
  CHECK_THROWS_AS(pointed_elk_from_json(Json::parse(R"({"worlds": [{"domain": [0]}], "relations": {}, "point": 4})")),
                  MalformedStructure);
}
