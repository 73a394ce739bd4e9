#include "elkat/session.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "elkat/parser.h"

namespace elkat {

namespace {

std::vector<std::string> file_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read target file " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  }
  return out;
}

template <typename T>
T get_or(const Json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw std::invalid_argument(std::string("config field '") + key + "' has the wrong type");
  }
}

template <typename B>
Json finish(const B& backend, const Oracle<B>& oracle, const SessionConfig& c, const LearnerBudget& budget,
            const std::vector<typename B::Example>& hypothesis, const Transcript* adapter_log) {
  Json out;
  out["backend"] = c.backend;
  out["learner"] = c.learner;
  out["oracle_strategy"] = to_string(c.strategy);
  out["seed"] = c.seed;
  out["pool_bound"] = c.pool_bound;
  out["pool_size"] = oracle.pool().size();
  out["budget"] = {{"sigma_size", budget.sigma_size},
                   {"largest_concept", budget.largest_concept},
                   {"exponent", budget.exponent},
                   {"max_queries", budget.max_queries}};
  Json target = Json::array();
  for (const auto& x : oracle.target()) target.push_back(backend.show(x));
  Json hyp = Json::array();
  for (const auto& x : hypothesis) hyp.push_back(backend.show(x));
  out["target"] = target;
  out["hypothesis"] = hyp;
  bool th = entails_all(backend, oracle.target(), hypothesis);
  bool ht = entails_all(backend, hypothesis, oracle.target());
  out["target_entails_hypothesis"] = th;
  out["hypothesis_entails_target"] = ht;
  out["equivalent"] = th && ht;
  out["counts"] = oracle.transcript().counts;
  out["total_queries"] = oracle.transcript().total();
  out["transcript"] = to_json(oracle.transcript());
  if (adapter_log) out["adapter_log"] = to_json(*adapter_log);
  return out;
}

template <typename B>
Json drive(const B& backend, Oracle<B>& oracle, const SessionConfig& c, const LearnerBudget& budget,
           const ProbePlan<typename B::Example>& plan) {
  using Ex = typename B::Example;
  auto show = [backend](const Ex& x) { return backend.show(x); };
  if (c.learner == "alg3") {
    auto r = epistemic_learner(backend, oracle, c.agent, plan);
    return finish(backend, oracle, c, budget, r.hypothesis, nullptr);
  }
  if (c.learner == "ex-only") {
    auto r = ex_only_learner(backend, oracle, c.agent);
    return finish(backend, oracle, c, budget, r.hypothesis, nullptr);
  }
  if (c.learner == "exact") {
    auto r = exact_learner(backend, oracle, plan);
    return finish(backend, oracle, c, budget, r.hypothesis, nullptr);
  }
  if (c.learner == "exact-wrapped") {
    ExactViaEpistemic<Ex> adapter(oracle, c.agent, show);
    auto r = exact_learner(backend, adapter, plan);
    return finish(backend, oracle, c, budget, r.hypothesis, &adapter.log());
  }
  if (c.learner == "epistemic-wrapped") {
    EpistemicViaExact<Ex> adapter(oracle, show);
    auto r = epistemic_learner(backend, adapter, c.agent, plan);
    return finish(backend, oracle, c, budget, r.hypothesis, &adapter.log());
  }
  throw std::invalid_argument("unknown learner '" + c.learner + "'");
}

Json run_el(const SessionConfig& c) {
  std::vector<ElAxiom> target;
  for (const auto& t : c.target) target.push_back(parse_axiom(t));
  Signature sig = signature(target);
  ElBackend backend;
  Oracle<ElBackend> oracle(backend, target, el_pool(target, sig, static_cast<std::size_t>(c.pool_bound)),
                           c.strategy, c.seed, c.budget);
  return drive(backend, oracle, c, learner_budget(target, c.budget), terminology_plan(sig));
}

Json run_prop(const SessionConfig& c) {
  PropBackend backend;
  std::vector<PropFormula> target;
  for (const auto& t : c.target) target.push_back(parse_prop(t, &backend.vocab));
  std::vector<PropFormula> pool = target;
  int n = backend.vocab.size();
  for (int u = 0; u < n; ++u) {
    pool.push_back(PropFormula::Var(u));
    pool.push_back(PropFormula::Not(PropFormula::Var(u)));
    for (int v = 0; v < n; ++v) {
      if (u != v) pool.push_back(PropFormula::Implies(PropFormula::Var(u), PropFormula::Var(v)));
    }
  }
  LearnerBudget budget;
  budget.sigma_size = static_cast<std::size_t>(n);
  for (const auto& t : target) budget.largest_concept = std::max(budget.largest_concept, t.size());
  budget.exponent = 2 * budget.largest_concept * budget.sigma_size + 2;
  budget.max_queries = c.budget;
  Oracle<PropBackend> oracle(backend, target, pool, c.strategy, c.seed, c.budget);
  return drive(backend, oracle, c, budget, ProbePlan<PropFormula>{});
}

}  // namespace

SessionConfig session_config_from_json(const Json& j, const std::string& base_dir) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  SessionConfig c;
  c.backend = get_or<std::string>(j, "backend", c.backend);
  if (c.backend != "el" && c.backend != "prop") throw std::invalid_argument("backend must be \"el\" or \"prop\"");
  if (j.contains("target")) {
    c.target = get_or<std::vector<std::string>>(j, "target", {});
  } else if (j.contains("target_file")) {
    std::filesystem::path p = get_or<std::string>(j, "target_file", "");
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    c.target = file_lines(p.string());
  } else {
    throw std::invalid_argument("config needs target_file or target");
  }
  c.learner = get_or<std::string>(j, "learner", c.learner);
  c.strategy = parse_strategy(get_or<std::string>(j, "oracle_strategy", to_string(c.strategy)));
  c.pool_bound = get_or<int>(j, "pool_bound", c.pool_bound);
  if (c.pool_bound < 1 || c.pool_bound > 4) throw std::invalid_argument("pool_bound must lie in 1..4");
  c.budget = get_or<int>(j, "budget", c.budget);
  c.seed = get_or<std::uint64_t>(j, "seed", c.seed);
  c.agent = get_or<std::string>(j, "agent", c.agent);
  return c;
}

Json run_session(const SessionConfig& config) {
  return config.backend == "prop" ? run_prop(config) : run_el(config);
}

}  // namespace elkat
