// elkat: satisfiability, entailment, witnesses and learning simulations.
// Exit codes: 0 answered, 1 internal or protocol error, 2 input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "elkat/brute_force.h"
#include "elkat/el_engine.h"
#include "elkat/elk_sat.h"
#include "elkat/json_io.h"
#include "elkat/parser.h"
#include "elkat/session.h"

using namespace elkat;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// The CLI never prints a witness that fails the model checker.
template <typename F>
void certify(const PointedElk& model, const F& phi) {
  if (!check_elk(model, phi)) throw InternalError("constructed witness does not satisfy the formula");
}

struct SatOptions {
  std::string file;
  std::string mode = "conjunctive";
  bool witness = false;
  bool json = false;
  int max_worlds = 0;
  int max_domain = 3;
};

int cmd_sat(const SatOptions& o) {
  ElkFormula phi = parse_formula_file(slurp(o.file));
  if (o.mode == "brute") {
    BruteForceBounds bounds{o.max_worlds > 0 ? o.max_worlds : default_world_bound(phi), o.max_domain};
    auto r = brute_force_elk_sat(phi, bounds);
    if (r.sat()) certify(*r.model, phi);
    const char* verdict = r.sat() ? "SAT" : "NO-MODEL-WITHIN-BOUNDS";
    if (o.json) {
      emit({{"sat", r.sat() ? Json(true) : Json(nullptr)},
            {"verdict", verdict},
            {"bounds", {{"max_worlds", bounds.max_worlds}, {"max_domain", bounds.max_domain}}},
            {"witness", r.sat() && o.witness ? to_json(*r.model) : Json(nullptr)}});
      return 0;
    }
    std::cout << verdict << "\n";
    if (r.sat() && o.witness) emit(to_json(*r.model));
    return 0;
  }

  SatVerdict v;
  if (o.mode == "conjunctive") {
    ConjunctiveElk c = to_conjunctive(phi);
    v = conjunctive_sat(c, o.witness);
    if (v.witness) certify(*v.witness, c);
  } else {
    v = elk_sat(phi, o.witness);
    if (v.witness) certify(*v.witness, phi);
  }
  if (o.json) {
    emit(to_json(v));
    return 0;
  }
  if (v.satisfiable) {
    std::cout << "SAT\n";
    if (v.witness) emit(to_json(*v.witness));
  } else if (v.failing_check) {
    std::cout << "UNSAT (condition " << v.failing_check->condition << ")\n";
  } else {
    std::cout << "UNSAT\n";
  }
  return 0;
}

int cmd_model(const std::string& file) {
  ElkFormula phi = parse_formula_file(slurp(file));
  SatVerdict v = elk_sat(phi, true);
  if (!v.satisfiable) {
    std::cout << "UNSAT\n";
    return 0;
  }
  certify(*v.witness, phi);
  emit(to_json(*v.witness));
  return 0;
}

int cmd_entail(const std::string& file, const std::string& axiom, bool json) {
  auto ontology = parse_ontology(slurp(file));
  ElAxiom ax = parse_axiom(axiom);
  bool yes = entails(ontology, ax);
  if (json) {
    emit({{"axiom", to_string(ax)}, {"entailed", yes}});
  } else {
    std::cout << (yes ? "ENTAILED" : "NOT-ENTAILED") << "\n";
  }
  return 0;
}

int cmd_learn(const std::string& file, bool json) {
  Json raw;
  try {
    raw = Json::parse(slurp(file));
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("config is not valid JSON: ") + e.what());
  }
  std::string base = std::filesystem::path(file).parent_path().string();
  SessionConfig config = session_config_from_json(raw, base.empty() ? "." : base);
  if (const char* env = std::getenv("ELKAT_SEED")) {
    try {
      config.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw InputError(std::string("ELKAT_SEED is not an unsigned integer: ") + env);
    }
  }
  Json out = run_session(config);
  if (json) {
    emit(out);
  } else {
    std::cout << (out["equivalent"].get<bool>() ? "EQUIVALENT" : "NOT-EQUIVALENT")
              << " hypothesis=" << out["hypothesis"].size() << " queries=" << out["total_queries"] << "\n";
  }
  return 0;
}

int cmd_thm2(int n, std::uint64_t seed, bool json) {
  if (n < 1 || n > 10) throw InputError("--n must lie in 1..10");
  Thm2Counts c = run_thm2(n, seed);
  if (json) {
    emit(to_json(c));
  } else {
    std::cout << "n=" << c.n << " ex_queries=" << c.ex_queries << " weak_examples=" << c.weak_examples
              << " eq_queries=" << c.eq_queries << "\n";
  }
  return 0;
}

int fail(int code, const std::string& kind, const std::string& detail, bool json) {
  std::cerr << kind << ": " << detail << "\n";
  if (json) emit({{"error", kind}, {"detail", detail}});
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"elkat: reasoning and learning for the epistemic description logic ELK"};
  app.require_subcommand(1);

  SatOptions sat;
  auto* sat_cmd = app.add_subcommand("sat", "Decide satisfiability of an ELK formula file");
  sat_cmd->add_option("FILE", sat.file, "Formula file, one conjunct per line")->required();
  sat_cmd->add_option("--mode", sat.mode, "Decision procedure")
      ->check(CLI::IsMember({"conjunctive", "full", "brute"}));
  sat_cmd->add_flag("--witness", sat.witness, "Emit a verified witness model");
  sat_cmd->add_flag("--json", sat.json, "Emit the verdict as JSON");
  sat_cmd->add_option("--max-worlds", sat.max_worlds, "Brute force: world bound (default from the formula)");
  sat_cmd->add_option("--max-domain", sat.max_domain, "Brute force: domain bound");

  std::string model_file;
  auto* model_cmd = app.add_subcommand("model", "Emit a verified witness model of an ELK formula file");
  model_cmd->add_option("FILE", model_file)->required();

  std::string onto_file, axiom;
  bool entail_json = false;
  auto* entail_cmd = app.add_subcommand("entail", "Decide whether an EL ontology entails an axiom");
  entail_cmd->add_option("ONTOLOGY", onto_file)->required();
  entail_cmd->add_option("--axiom", axiom)->required();
  entail_cmd->add_flag("--json", entail_json);

  std::string config_file;
  bool learn_json = false;
  auto* learn_cmd = app.add_subcommand("learn", "Run a learning session from a JSON config");
  learn_cmd->add_option("CONFIG", config_file)->required();
  learn_cmd->add_flag("--json", learn_json, "Emit transcript, hypothesis and counts as JSON");

  int n = 0;
  std::uint64_t seed = 1;
  bool exp_json = false;
  auto* exp_cmd = app.add_subcommand("experiment", "Run a query-complexity experiment");
  exp_cmd->require_subcommand(1);
  auto* thm2_cmd = exp_cmd->add_subcommand("thm2", "EX-only vs EQ on the propositional separation framework");
  thm2_cmd->add_option("--n", n, "Number of bit variables (1..10)")->required();
  thm2_cmd->add_option("--seed", seed);
  thm2_cmd->add_flag("--json", exp_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  bool json = sat.json || entail_json || learn_json || exp_json;
  try {
    if (*sat_cmd) return cmd_sat(sat);
    if (*model_cmd) return cmd_model(model_file);
    if (*entail_cmd) return cmd_entail(onto_file, axiom, entail_json);
    if (*learn_cmd) return cmd_learn(config_file, learn_json);
    if (*thm2_cmd) return cmd_thm2(n, seed, exp_json);
  } catch (const ParseError& e) {
    return fail(2, "ParseError", e.what(), json);
  } catch (const FragmentError& e) {
    return fail(2, "FragmentError", e.what(), json);
  } catch (const InputError& e) {
    return fail(2, "InputError", e.what(), json);
  } catch (const std::invalid_argument& e) {
    return fail(2, "ConfigError", e.what(), json);
  } catch (const PoolExhausted& e) {
    return fail(1, "PoolExhausted", e.what(), json);
  } catch (const BudgetExceeded& e) {
    return fail(1, "BudgetExceeded", e.what(), json);
  } catch (const std::exception& e) {
    return fail(1, "InternalError", e.what(), json);
  }
  return 1;
}
