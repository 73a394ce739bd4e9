// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria. Optional argument: seed.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "elkat/brute_force.h"
#include "elkat/el_engine.h"
#include "elkat/elk_sat.h"
#include "elkat/json_io.h"
#include "elkat/learning.h"
#include "elkat/parser.h"
#include "elkat/session.h"
#include "support/generators.h"

using namespace elkat;
using namespace elkat::testing;

namespace {

// Pinned tolerances and sizes.
constexpr int kCorpus = 2000;             // criterion 1 instances
constexpr int kMaxDisagreements = 0;      // criteria 1-5, 8
constexpr double kCorpusSeconds = 120.0;  // criterion 1
constexpr int kMaxDomain = 3;
constexpr int kLiteralSets = 1000;        // criterion 4b
constexpr int kCanonicalOntologies = 200; // criterion 4c
constexpr int kGeneralInstances = 500;    // criterion 5
constexpr int kGeneralWorldCap = 5;
constexpr double kThm2Seconds = 5.0;      // criterion 6
constexpr int kTerminologies = 20;        // criteria 7, 8
constexpr int kTerminologyAxioms = 8;
constexpr int kTerminologyConceptSize = 4;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t fnv(std::uint64_t h, const std::string& s) {
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  return h;
}

constexpr std::uint64_t kFnvBasis = 14695981039346656037ULL;

struct Outcome {
  bool pass = false;
  std::string summary;
  Json detail;  // everything here must be a pure function of the seed
};

// ---- criteria 1, 2, 3, 5a share the conjunctive corpus

struct CorpusRun {
  Outcome c1, c2, c3, c5a;
  double seconds = 0;
};

CorpusRun conjunctive_corpus(std::uint64_t seed) {
  Rng rng(seed);
  Vocabulary voc;  // A, B / r / a / agents 1, 2
  ConjunctiveShape shape;
  shape.concept_size = 2;
  int agree = 0, disagree = 0, sat = 0, witnesses_ok = 0, flat_agree = 0, flat_changed = 0, full_agree = 0;
  std::string verdicts;
  std::uint64_t digest = kFnvBasis;
  Json disagreements = Json::array();
  auto t0 = Clock::now();
  for (int i = 0; i < kCorpus; ++i) {
    ConjunctiveElk phi = random_conjunctive(rng, voc, shape);
    SatVerdict v = conjunctive_sat(phi, true);
    BruteForceResult bf = brute_force_elk_sat(phi, {default_world_bound(phi), kMaxDomain});
    verdicts += v.satisfiable ? 'S' : 'U';
    if (v.satisfiable == bf.sat()) {
      ++agree;
    } else {
      ++disagree;
      disagreements.push_back(to_string(render(phi)));
    }
    if (v.satisfiable) {
      ++sat;
      if (v.witness && check_elk(*v.witness, phi)) ++witnesses_ok;
      digest = fnv(digest, to_json(*v.witness).dump());
    }
    FlatConjunctiveElk flat = flatten(phi);
    bool flat_sat = conjunctive_sat(flat.phi).satisfiable;
    bool flat_ok = flat_sat == v.satisfiable;
    if (!(flat.phi == phi)) {
      ++flat_changed;
      flat_ok = flat_ok && brute_force_elk_sat(flat.phi, {default_world_bound(flat.phi), kMaxDomain}).sat() == flat_sat;
    }
    flat_agree += flat_ok;
    full_agree += elk_sat(render(phi)).satisfiable == v.satisfiable;
  }
  CorpusRun r;
  r.seconds = seconds_since(t0);
  char buf[256];
  std::snprintf(buf, sizeof buf, "%d/%d agree with brute force (%d SAT, %d disagreements, max allowed %d)",
                agree, kCorpus, sat, disagree, kMaxDisagreements);
  r.c1 = {disagree <= kMaxDisagreements && agree + disagree >= kCorpus, buf,
          {{"instances", kCorpus}, {"agree", agree}, {"sat", sat}, {"verdicts", verdicts},
           {"disagreements", disagreements}}};
  std::snprintf(buf, sizeof buf, "%d/%d SAT witnesses model-check", witnesses_ok, sat);
  r.c2 = {witnesses_ok == sat, buf, {{"sat", sat}, {"checked", witnesses_ok}, {"witness_digest", digest}}};
  std::snprintf(buf, sizeof buf, "%d/%d flatten-invariant (%d changed by flattening, re-checked by brute force)",
                flat_agree, kCorpus, flat_changed);
  r.c3 = {flat_agree == kCorpus, buf, {{"agree", flat_agree}, {"changed", flat_changed}}};
  std::snprintf(buf, sizeof buf, "%d/%d", full_agree, kCorpus);
  r.c5a = {full_agree == kCorpus, buf, {{"agree", full_agree}}};
  return r;
}

// ---- criterion 4

std::vector<ElAxiom> random_normalized_ontology(Rng& rng) {
  const std::vector<std::string> names{"A", "B", "C"};
  const std::vector<std::string> inds{"a", "b"};
  auto name = [&] { return Concept::Name(pick(rng, names)); };
  std::vector<ElAxiom> o;
  for (int n = uniform(rng, 1, 6); n > 0; --n) {
    switch (uniform(rng, 0, 5)) {
      case 0: o.push_back(ElAxiom::Inclusion(name(), name())); break;
      case 1: o.push_back(ElAxiom::Inclusion(Concept::Conj(name(), name()), name())); break;
      case 2: o.push_back(ElAxiom::Inclusion(name(), Concept::Exists("r", name()))); break;
      case 3: o.push_back(ElAxiom::Inclusion(Concept::Exists("r", name()), name())); break;
      case 4: o.push_back(ElAxiom::ConceptAssertion(pick(rng, names), pick(rng, inds))); break;
      default: o.push_back(ElAxiom::RoleAssertion("r", pick(rng, inds), pick(rng, inds))); break;
    }
  }
  return o;
}

Outcome criterion4(std::uint64_t seed) {
  Json detail;
  // (a) worked examples
  auto fc = parse_ontology("FrenchChef(Soyer)\nCrepe <= some contains . Flour\nCrepe & some contains . Sugar <= Dessert\n");
  bool crepe = !entails(fc, parse_axiom("Crepe <= Dessert"));
  bool sugar = entails(fc, parse_axiom("Crepe & some contains . Sugar <= Dessert"));
  auto buriti = parse_ontology("Buriti <= BrazilianTree\nViolaBuriti <= some madeFrom . Buriti\n");
  ElAxiom viola = parse_axiom("ViolaBuriti <= some madeFrom . BrazilianTree");
  Oracle<ElBackend> nicolas(ElBackend{}, buriti, buriti, Strategy::kSmallestFirst, seed);
  bool before = !nicolas.epistemic_entails_K("Nicolas", viola);
  for (const auto& ax : buriti) nicolas.kmem(ax, "Nicolas");
  bool buriti_ok = entails(buriti, viola) && before && nicolas.epistemic_entails_K("Nicolas", viola);
  bool a_ok = crepe && sugar && buriti_ok;
  detail["a"] = {{"crepe_not_dessert", crepe}, {"sugar_crepe_dessert", sugar}, {"buriti", buriti_ok}};

  // (b) one-sided agreement with bounded model search
  Rng rng(seed + 4);
  Vocabulary voc;
  voc.individuals = {"a", "b"};
  int found = 0, confirmed = 0, only_engine = 0, none = 0;
  for (int i = 0; i < kLiteralSets; ++i) {
    auto lits = random_literals(rng, voc, 1, 4, 3);
    bool engine = literals_sat(lits);
    auto model = brute_force_literals_sat(lits, kMaxDomain);
    if (model) {
      ++found;
      confirmed += engine;
    } else if (engine) {
      ++only_engine;
    } else {
      ++none;
    }
  }
  bool b_ok = confirmed == found;
  detail["b"] = {{"sets", kLiteralSets}, {"brute_force_models", found}, {"engine_confirms", confirmed},
                 {"engine_sat_beyond_bound", only_engine}, {"both_unsat", none}};

  // (c) canonical models
  int models_ok = 0;
  for (int i = 0; i < kCanonicalOntologies; ++i) {
    auto o = random_normalized_ontology(rng);
    auto cm = canonical_model(o);
    bool ok = true;
    for (const auto& ax : o) ok = ok && check_el(cm.interpretation, ax);
    models_ok += ok;
  }
  bool c_ok = models_ok == kCanonicalOntologies;
  detail["c"] = {{"ontologies", kCanonicalOntologies}, {"satisfied", models_ok}};

  char buf[256];
  std::snprintf(buf, sizeof buf,
                "(a) worked examples %s; (b) %d/%d brute-force models confirmed by literals_sat (%d sets); "
                "(c) %d/%d canonical models satisfy O",
                a_ok ? "reproduced" : "WRONG", confirmed, found, kLiteralSets, models_ok, kCanonicalOntologies);
  return {a_ok && b_ok && c_ok, buf, detail};
}

// ---- criterion 5b

Outcome criterion5_general(std::uint64_t seed) {
  Rng rng(seed + 5);
  Vocabulary voc;
  int agree = 0, sat = 0, witnesses_ok = 0;
  std::string verdicts;
  Json disagreements = Json::array();
  for (int i = 0; i < kGeneralInstances; ++i) {
    ElkFormula phi = random_elk_formula(rng, voc, uniform(rng, 1, 5), 2, 3, 2);
    SatVerdict v = elk_sat(phi, true);
    BruteForceBounds bounds{std::min(default_world_bound(phi), kGeneralWorldCap), kMaxDomain};
    bool bf = brute_force_elk_sat(phi, bounds).sat();
    verdicts += v.satisfiable ? 'S' : 'U';
    if (v.satisfiable == bf) {
      ++agree;
    } else {
      disagreements.push_back(to_string(phi));
    }
    if (v.satisfiable) {
      ++sat;
      witnesses_ok += v.witness && check_elk(*v.witness, phi);
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d/%d general instances agree with brute force, %d/%d witnesses check", agree,
                kGeneralInstances, witnesses_ok, sat);
  return {kGeneralInstances - agree <= kMaxDisagreements && witnesses_ok == sat, buf,
          {{"agree", agree}, {"sat", sat}, {"verdicts", verdicts}, {"disagreements", disagreements}}};
}

// ---- criterion 6

Outcome criterion6(std::uint64_t seed, double* seconds) {
  auto t0 = Clock::now();
  Json detail = Json::array();
  bool ok = true;
  std::string line;
  for (int n = 1; n <= 4; ++n) {
    Thm2Counts c = run_thm2(n, seed);
    int bound = 1 << n;
    ok = ok && c.ex_queries >= bound && c.weak_examples == bound && c.eq_queries == 1;
    detail.push_back(to_json(c));
    line += "n=" + std::to_string(n) + ": ex=" + std::to_string(c.ex_queries) + " (>= " + std::to_string(bound) +
            ") eq=" + std::to_string(c.eq_queries) + "; ";
  }
  *seconds = seconds_since(t0);
  return {ok, line, detail};
}

// ---- criteria 7, 8

Vocabulary terminology_vocabulary() {
  Vocabulary voc;
  voc.concepts = {"A", "B", "C"};
  voc.roles = {"r"};
  voc.individuals = {};
  return voc;
}

std::vector<std::vector<ElAxiom>> terminologies(std::uint64_t seed) {
  Rng rng(seed + 7);
  Vocabulary voc = terminology_vocabulary();
  std::vector<std::vector<ElAxiom>> out;
  while (static_cast<int>(out.size()) < kTerminologies) {
    auto t = random_named_terminology(rng, voc, kTerminologyAxioms, kTerminologyConceptSize);
    if (!t.empty()) out.push_back(std::move(t));
  }
  return out;
}

Json show_all(const std::vector<ElAxiom>& axs) {
  Json out = Json::array();
  for (const auto& a : axs) out.push_back(to_string(a));
  return out;
}

Oracle<ElBackend> oracle_for(const std::vector<ElAxiom>& target, Strategy s, std::uint64_t seed) {
  return Oracle<ElBackend>(ElBackend{}, target, el_pool(target, signature(target), 2), s, seed);
}

Strategy strategy_for(int i) {
  static const Strategy all[] = {Strategy::kSmallestFirst, Strategy::kLargestFirst, Strategy::kAdversarial};
  return all[i % 3];
}

Outcome criterion7(std::uint64_t seed) {
  auto targets = terminologies(seed);
  int equivalent_count = 0, finished = 0, sound = 0, told_sound = 0;
  Json runs = Json::array();
  for (int i = 0; i < kTerminologies; ++i) {
    const auto& target = targets[i];
    auto oracle = oracle_for(target, strategy_for(i), seed + i);
    auto r = learn_terminology(signature(target), oracle);
    bool eq = entails_all(target, r.hypothesis) && entails_all(r.hypothesis, target);
    const auto& tr = oracle.transcript();
    bool fin = !tr.entries.empty() && tr.entries.back().kind == "ex" && tr.entries.back().answer == "finished";
    // The hypothesis only grows, so checking each addition covers every
    // intermediate hypothesis.
    bool h_sound = true;
    for (const auto& ax : r.hypothesis) h_sound = h_sound && entails(target, ax);
    bool t_sound = true;
    for (const auto& e : tr.entries) {
      if (e.kind == "kmem" && e.answer == "yes") t_sound = t_sound && entails(target, parse_axiom(e.input[0]));
      if (e.kind == "ex" && e.answer != "finished") t_sound = t_sound && entails(target, parse_axiom(e.answer));
    }
    equivalent_count += eq;
    finished += fin;
    sound += h_sound;
    told_sound += t_sound;
    runs.push_back({{"target", show_all(target)}, {"hypothesis", show_all(r.hypothesis)}, {"counts", tr.counts}});
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "%d/%d mutually entailing, %d/%d ended with \"you finished\", %d/%d sound at every step",
                equivalent_count, kTerminologies, finished, kTerminologies, std::min(sound, told_sound),
                kTerminologies);
  bool ok = equivalent_count == kTerminologies && finished == kTerminologies && sound == kTerminologies &&
            told_sound == kTerminologies;
  return {ok, buf, runs};
}

// Each exact query through ExactViaEpistemic becomes kmem (mem) or |h| kmem
// followed by one ex (eq).
bool aligned_exact_over_epistemic(const Transcript& exact, const Transcript& epistemic) {
  std::size_t k = 0;
  const auto& ep = epistemic.entries;
  for (const auto& e : exact.entries) {
    if (e.kind == "mem") {
      if (k >= ep.size() || ep[k].kind != "kmem" || ep[k].input != e.input || ep[k].answer != e.answer) return false;
      ++k;
      continue;
    }
    for (const auto& x : e.input) {
      if (k >= ep.size() || ep[k].kind != "kmem" || ep[k].input[0] != x) return false;
      ++k;
    }
    if (k >= ep.size() || ep[k].kind != "ex") return false;
    std::string expected = e.answer == "yes" ? "finished" : e.answer;
    if (ep[k].answer != expected) return false;
    ++k;
  }
  return k == ep.size();
}

// Each epistemic query through EpistemicViaExact becomes exactly one exact
// query: kmem -> mem, ex -> eq(s^L).
bool aligned_epistemic_over_exact(const Transcript& epistemic, const Transcript& exact) {
  if (epistemic.total() != exact.total()) return false;
  std::size_t told = 0;
  for (std::size_t i = 0; i < epistemic.entries.size(); ++i) {
    const auto& a = epistemic.entries[i];
    const auto& b = exact.entries[i];
    if (a.kind == "kmem") {
      if (b.kind != "mem" || b.input != a.input || b.answer != a.answer) return false;
      if (a.answer == "yes") ++told;
    } else {
      std::string expected = a.answer == "finished" ? "yes" : a.answer;
      if (b.kind != "eq" || b.answer != expected || b.input.size() > told) return false;
      if (a.answer != "finished") ++told;
    }
  }
  return true;
}

Outcome criterion8(std::uint64_t seed) {
  auto targets = terminologies(seed);
  int ok_count = 0;
  Json runs = Json::array();
  auto show = [](const ElAxiom& a) { return to_string(a); };
  for (int i = 0; i < kTerminologies; ++i) {
    const auto& target = targets[i];
    Signature sig = signature(target);
    ProbePlan<ElAxiom> plan = terminology_plan(sig);
    ElBackend backend;
    Strategy s = strategy_for(i);

    auto exact_oracle = oracle_for(target, s, seed + i);
    auto direct = exact_learner(backend, exact_oracle, plan);

    // Exact learner on epistemic oracles.
    auto ep_oracle = oracle_for(target, s, seed + i);
    ExactViaEpistemic<ElAxiom> up(ep_oracle, "1", show);
    auto wrapped = exact_learner(backend, up, plan);
    const Transcript& exact_view = up.log();
    int exact_size = exact_view.total() + exact_view.input_items();
    int hypothesis_items = 0;
    for (const auto& e : exact_view.entries) hypothesis_items += e.kind == "eq" ? static_cast<int>(e.input.size()) : 0;
    int predicted = exact_view.count("mem") + hypothesis_items + exact_view.count("eq");
    int epistemic_queries = ep_oracle.transcript().total();
    bool bound_ok = epistemic_queries == predicted && epistemic_queries <= exact_size * exact_size;
    bool align_up = aligned_exact_over_epistemic(exact_view, ep_oracle.transcript());

    // Terminology learner on exact oracles.
    auto ex_oracle = oracle_for(target, s, seed + i);
    EpistemicViaExact<ElAxiom> down(ex_oracle, show);
    auto back = learn_terminology(sig, down);
    bool align_down = aligned_epistemic_over_exact(down.log(), ex_oracle.transcript());

    bool eq = equivalent(direct.hypothesis, target) && equivalent(wrapped.hypothesis, target) &&
              equivalent(back.hypothesis, target);
    bool ok = eq && bound_ok && align_up && align_down;
    ok_count += ok;
    runs.push_back({{"target", show_all(target)},
                    {"exact_queries", exact_view.total()},
                    {"exact_input_size", exact_size},
                    {"epistemic_queries", epistemic_queries},
                    {"predicted", predicted},
                    {"reverse_epistemic_queries", down.log().total()},
                    {"reverse_exact_queries", ex_oracle.transcript().total()},
                    {"equivalent", eq},
                    {"aligned", align_up && align_down}});
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "%d/%d targets: equivalent hypotheses both ways, epistemic queries = #mem + sum|h| + #eq <= "
                "(exact input size)^2, transcripts aligned",
                ok_count, kTerminologies);
  return {ok_count == kTerminologies, buf, runs};
}

// ---- criterion 9

Json session_json(std::uint64_t seed) {
  SessionConfig c;
  c.target = {"Viola <= Instrument", "ViolaBuriti <= Viola", "ViolaBuriti <= some madeFrom . Buriti"};
  c.strategy = Strategy::kAdversarial;
  c.seed = seed;
  Json out = Json::array();
  for (const char* learner : {"alg3", "exact", "exact-wrapped", "epistemic-wrapped", "ex-only"}) {
    c.learner = learner;
    out.push_back(run_session(c));
  }
  return out;
}

void report(int id, const char* name, const Outcome& o, int* failures, const std::string& extra = "") {
  std::printf("%s criterion %d (%s): %s%s\n", o.pass ? "PASS" : "FAIL", id, name, o.summary.c_str(),
              extra.c_str());
  if (!o.pass) {
    ++*failures;
    std::printf("  detail: %s\n", o.detail.dump().c_str());
  }
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240501;
  std::printf("acceptance seed %llu\n", static_cast<unsigned long long>(seed));
  int failures = 0;

  CorpusRun corpus = conjunctive_corpus(seed);
  char timing[96];
  std::snprintf(timing, sizeof timing, "; %.1fs (limit %.0fs)", corpus.seconds, kCorpusSeconds);
  corpus.c1.pass = corpus.c1.pass && corpus.seconds < kCorpusSeconds;
  report(1, "conjunctive SAT vs brute force", corpus.c1, &failures, timing);
  report(2, "witness self-certification", corpus.c2, &failures);
  report(3, "flattening equivalence", corpus.c3, &failures);

  Outcome c4 = criterion4(seed);
  report(4, "EL engine", c4, &failures);

  Outcome c5b = criterion5_general(seed);
  Outcome c5{corpus.c5a.pass && c5b.pass,
             "elk_sat = conjunctive_sat on " + corpus.c5a.summary + " corpus instances; " + c5b.summary,
             {{"conjunctive", corpus.c5a.detail}, {"general", c5b.detail}}};
  report(5, "full ELK SAT", c5, &failures);

  double thm2_seconds = 0;
  Outcome c6 = criterion6(seed, &thm2_seconds);
  std::snprintf(timing, sizeof timing, "%.2fs (limit %.0fs)", thm2_seconds, kThm2Seconds);
  c6.pass = c6.pass && thm2_seconds < kThm2Seconds;
  report(6, "EX vs EQ separation", c6, &failures, timing);

  Outcome c7 = criterion7(seed);
  report(7, "terminology learning", c7, &failures);

  Outcome c8 = criterion8(seed);
  report(8, "adapter round trips", c8, &failures);

  // Determinism: every criterion's JSON, recomputed with the same seed.
  std::vector<std::pair<std::string, std::function<Json()>>> reruns = {
      {"1-3,5a", [&] {
         CorpusRun again = conjunctive_corpus(seed);
         return Json{again.c1.detail, again.c2.detail, again.c3.detail, again.c5a.detail};
       }},
      {"4", [&] { return criterion4(seed).detail; }},
      {"5b", [&] { return criterion5_general(seed).detail; }},
      {"6", [&] { double s; return criterion6(seed, &s).detail; }},
      {"7", [&] { return criterion7(seed).detail; }},
      {"8", [&] { return criterion8(seed).detail; }},
      {"learn sessions", [&] { return session_json(seed); }},
  };
  std::vector<std::string> first = {
      Json{corpus.c1.detail, corpus.c2.detail, corpus.c3.detail, corpus.c5a.detail}.dump(),
      c4.detail.dump(), c5b.detail.dump(), c6.detail.dump(), c7.detail.dump(), c8.detail.dump(),
      session_json(seed).dump()};
  int identical = 0;
  std::string differing;
  for (std::size_t i = 0; i < reruns.size(); ++i) {
    if (reruns[i].second().dump() == first[i]) {
      ++identical;
    } else {
      differing += " " + reruns[i].first;
    }
  }
  Outcome c9{identical == static_cast<int>(reruns.size()),
             std::to_string(identical) + "/" + std::to_string(reruns.size()) +
                 " JSON outputs byte-identical across two runs" + (differing.empty() ? "" : ", differ:" + differing),
             {}};
  report(9, "determinism", c9, &failures);

  std::printf("%d of 9 criteria failed\n", failures);
  return failures;
}
