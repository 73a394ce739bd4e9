// Exact (MEM, EQ) and epistemic (K-membership, EX) learning over a pluggable
// logic: oracles with their epistemic state, generic learners, the adapters
// between the two models, and the EL and propositional instantiations.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "elkat/el_engine.h"
#include "elkat/prop.h"
#include "elkat/syntax.h"

namespace elkat {

class PoolExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Which eligible example an oracle hands out.
enum class Strategy { kSmallestFirst, kLargestFirst, kAdversarial };

Strategy parse_strategy(std::string_view name);  // std::invalid_argument on unknown names
std::string to_string(Strategy s);

struct ElBackend {
  using Example = ElAxiom;

  bool entails(const std::vector<ElAxiom>& theory, const ElAxiom& x) const { return elkat::entails(theory, x); }
  std::size_t size(const ElAxiom& x) const { return x.size(); }
  std::string show(const ElAxiom& x) const { return to_string(x); }
};

struct PropBackend {
  using Example = PropFormula;

  PropVocabulary vocab;

  bool entails(const std::vector<PropFormula>& theory, const PropFormula& x) const {
    return prop_entails(theory, x, vocab.size());
  }
  std::size_t size(const PropFormula& x) const { return x.size(); }
  std::string show(const PropFormula& x) const { return to_string(x, vocab); }
};

template <typename B>
bool entails_all(const B& backend, const std::vector<typename B::Example>& theory,
                 const std::vector<typename B::Example>& xs) {
  return std::all_of(xs.begin(), xs.end(), [&](const auto& x) { return backend.entails(theory, x); });
}

template <typename B>
bool equivalent(const B& backend, const std::vector<typename B::Example>& a,
                const std::vector<typename B::Example>& b) {
  return entails_all(backend, a, b) && entails_all(backend, b, a);
}

struct TranscriptEntry {
  std::string kind;  // mem, eq, kmem, ex
  std::string agent;
  std::vector<std::string> input;
  std::string answer;  // yes, no, finished, or the returned example
  std::string note;

  friend bool operator==(const TranscriptEntry&, const TranscriptEntry&) = default;
};

struct Transcript {
  std::vector<TranscriptEntry> entries;
  std::map<std::string, int> counts;

  void add(TranscriptEntry e) {
    ++counts[e.kind];
    entries.push_back(std::move(e));
  }
  int count(const std::string& kind) const {
    auto it = counts.find(kind);
    return it == counts.end() ? 0 : it->second;
  }
  int total() const { return static_cast<int>(entries.size()); }
  // Sum over all queries of the number of examples passed in.
  int input_items() const {
    int n = 0;
    for (const auto& e : entries) n += static_cast<int>(e.input.size());
    return n;
  }
};

// The learner's side of the exact model; nullopt from eq means "yes".
template <typename Ex>
class ExactTeacher {
 public:
  virtual ~ExactTeacher() = default;
  virtual bool mem(const Ex& x) = 0;
  virtual std::optional<Ex> eq(const std::vector<Ex>& h) = 0;
  virtual void note(std::string) {}
};

// The learner's side of the epistemic model; nullopt from ex means
// "you finished".
template <typename Ex>
class EpistemicTeacher {
 public:
  virtual ~EpistemicTeacher() = default;
  virtual bool kmem(const Ex& x, const Agent& j) = 0;
  virtual std::optional<Ex> ex(const Agent& j) = 0;
  virtual void note(std::string) {}
};

template <typename Ex>
struct EpistemicState {
  std::map<Agent, std::vector<Ex>> told;
  int k = 1;
};

// Answers all four query kinds for one target. Examples are drawn from a
// finite pool kept in (size, text) order.
template <typename B>
class Oracle : public ExactTeacher<typename B::Example>, public EpistemicTeacher<typename B::Example> {
 public:
  using Example = typename B::Example;

  Oracle(B backend, std::vector<Example> target, std::vector<Example> pool, Strategy strategy,
         std::uint64_t seed, int max_queries = -1)
      : backend_(std::move(backend)),
        target_(std::move(target)),
        strategy_(strategy),
        rng_(seed),
        max_queries_(max_queries) {
    for (auto& x : pool) {
      if (std::find(pool_.begin(), pool_.end(), x) == pool_.end()) pool_.push_back(std::move(x));
    }
    std::vector<std::pair<std::pair<std::size_t, std::string>, Example>> keyed;
    for (auto& x : pool_) keyed.push_back({{backend_.size(x), backend_.show(x)}, std::move(x)});
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    pool_.clear();
    for (auto& [key, x] : keyed) pool_.push_back(std::move(x));
  }

  const B& backend() const { return backend_; }
  const std::vector<Example>& target() const { return target_; }
  const std::vector<Example>& pool() const { return pool_; }
  const EpistemicState<Example>& state() const { return state_; }
  const Transcript& transcript() const { return transcript_; }

  const std::vector<Example>& told(const Agent& j) const {
    static const std::vector<Example> kEmpty;
    auto it = state_.told.find(j);
    return it == state_.told.end() ? kEmpty : it->second;
  }

  bool epistemic_entails_K(const Agent& j, const Example& x) const { return backend_.entails(told(j), x); }

  void note(std::string n) override { note_ = std::move(n); }

  bool mem(const Example& x) override {
    charge();
    bool yes = backend_.entails(target_, x);
    log("mem", "", {x}, yes ? "yes" : "no");
    return yes;
  }

  std::optional<Example> eq(const std::vector<Example>& h) override {
    charge();
    std::optional<Example> out;
    if (!equivalent(backend_, h, target_)) {
      std::vector<Example> candidates = pool_;
      for (const auto& x : h) {
        if (std::find(candidates.begin(), candidates.end(), x) == candidates.end()) candidates.push_back(x);
      }
      std::vector<Example> eligible;
      for (const auto& x : candidates) {
        bool pos = backend_.entails(target_, x);
        if (pos != backend_.entails(h, x)) eligible.push_back(x);
      }
      if (eligible.empty()) throw PoolExhausted("no counterexample in the candidate pool although h is not equivalent");
      out = choose(eligible, h);
    }
    log("eq", "", h, out ? backend_.show(*out) : "yes");
    return out;
  }

  bool kmem(const Example& x, const Agent& j) override {
    charge();
    bool yes = backend_.entails(target_, x);
    if (yes) add_told(j, x);
    log("kmem", j, {x}, yes ? "yes" : "no");
    return yes;
  }

  std::optional<Example> ex(const Agent& j) override {
    charge();
    std::vector<Example> eligible;
    for (std::size_t i = 0; i < pool_.size(); ++i) {
      if (positive(i) && !epistemic_entails_K(j, pool_[i])) {
        eligible.push_back(pool_[i]);
        if (strategy_ == Strategy::kSmallestFirst) break;
      }
    }
    std::optional<Example> out;
    if (!eligible.empty()) {
      out = choose(eligible, told(j));
      add_told(j, *out);
    } else if (!entails_all(backend_, told(j), target_)) {
      throw PoolExhausted("no example left in the pool although agent " + j + " does not know the target");
    }
    log("ex", j, {}, out ? backend_.show(*out) : "finished");
    return out;
  }

 private:
  void charge() {
    if (max_queries_ >= 0 && transcript_.total() >= max_queries_) {
      throw BudgetExceeded("query budget of " + std::to_string(max_queries_) + " exhausted");
    }
    ++state_.k;
  }

  void add_told(const Agent& j, const Example& x) {
    auto& t = state_.told[j];
    if (std::find(t.begin(), t.end(), x) == t.end()) t.push_back(x);
  }

  bool positive(std::size_t i) {
    if (positive_.size() != pool_.size()) positive_.assign(pool_.size(), -1);
    if (positive_[i] < 0) positive_[i] = backend_.entails(target_, pool_[i]) ? 1 : 0;
    return positive_[i] == 1;
  }

  // `known` is what the learner already has; the adversary prefers the
  // example that lets it infer the fewest other eligible examples.
  Example choose(const std::vector<Example>& eligible, const std::vector<Example>& known) {
    switch (strategy_) {
      case Strategy::kSmallestFirst:
        return eligible.front();
      case Strategy::kLargestFirst:
        return eligible.back();
      case Strategy::kAdversarial:
        break;
    }
    std::vector<std::size_t> best;
    std::size_t best_score = SIZE_MAX;
    for (std::size_t i = 0; i < eligible.size(); ++i) {
      std::vector<Example> after = known;
      after.push_back(eligible[i]);
      std::size_t score = 0;
      for (std::size_t k = 0; k < eligible.size(); ++k) {
        if (k != i && backend_.entails(after, eligible[k])) ++score;
      }
      if (score < best_score) {
        best_score = score;
        best.clear();
      }
      if (score == best_score) best.push_back(i);
    }
    std::uniform_int_distribution<std::size_t> pick(0, best.size() - 1);
    return eligible[best[pick(rng_)]];
  }

  void log(std::string kind, Agent agent, const std::vector<Example>& input, std::string answer) {
    TranscriptEntry e{std::move(kind), std::move(agent), {}, std::move(answer), note_};
    for (const auto& x : input) e.input.push_back(backend_.show(x));
    transcript_.add(std::move(e));
  }

  B backend_;
  std::vector<Example> target_;
  std::vector<Example> pool_;
  std::vector<int> positive_;
  Strategy strategy_;
  std::mt19937_64 rng_;
  int max_queries_;
  EpistemicState<Example> state_;
  Transcript transcript_;
  std::string note_;
};

// Candidates a learner asks about before the main loop, and those it derives
// from each counterexample.
template <typename Ex>
struct ProbePlan {
  std::vector<Ex> initial;
  std::function<std::vector<Ex>(const Ex&)> refine;
};

template <typename Ex>
struct LearnResult {
  std::vector<Ex> hypothesis;  // in the order the axioms were added
};

namespace detail {

template <typename B, typename Ask>
void probe(const B& backend, const std::vector<typename B::Example>& candidates,
           std::vector<typename B::Example>* h, Ask ask) {
  for (const auto& c : candidates) {
    if (backend.entails(*h, c)) continue;
    if (ask(c)) h->push_back(c);
  }
}

}  // namespace detail

// Asks the initial candidates, then loops on EX; each returned example is
// refined by probing with K-membership queries and then added itself.
template <typename B>
LearnResult<typename B::Example> epistemic_learner(const B& backend, EpistemicTeacher<typename B::Example>& t,
                                                   const Agent& j, const ProbePlan<typename B::Example>& plan) {
  using Ex = typename B::Example;
  LearnResult<Ex> r;
  auto ask = [&](const Ex& x) { return t.kmem(x, j); };
  t.note("initial");
  detail::probe(backend, plan.initial, &r.hypothesis, ask);
  for (;;) {
    t.note("");
    std::optional<Ex> x = t.ex(j);
    if (!x) break;
    if (plan.refine) {
      t.note("probe");
      detail::probe(backend, plan.refine(*x), &r.hypothesis, ask);
    }
    if (std::find(r.hypothesis.begin(), r.hypothesis.end(), *x) == r.hypothesis.end()) r.hypothesis.push_back(*x);
  }
  t.note("");
  return r;
}

// Example queries only.
template <typename B>
LearnResult<typename B::Example> ex_only_learner(const B& backend, EpistemicTeacher<typename B::Example>& t,
                                                 const Agent& j) {
  return epistemic_learner(backend, t, j, ProbePlan<typename B::Example>{});
}

// Same plan with MEM and EQ: the hypothesis only ever holds confirmed
// consequences, so every counterexample is positive.
template <typename B>
LearnResult<typename B::Example> exact_learner(const B& backend, ExactTeacher<typename B::Example>& t,
                                               const ProbePlan<typename B::Example>& plan) {
  using Ex = typename B::Example;
  LearnResult<Ex> r;
  auto ask = [&](const Ex& x) { return t.mem(x); };
  t.note("initial");
  detail::probe(backend, plan.initial, &r.hypothesis, ask);
  for (;;) {
    t.note("");
    std::optional<Ex> x = t.eq(r.hypothesis);
    if (!x) break;
    if (backend.entails(r.hypothesis, *x)) throw std::logic_error("negative counterexample for a sound hypothesis");
    if (plan.refine) {
      t.note("probe");
      detail::probe(backend, plan.refine(*x), &r.hypothesis, ask);
    }
    if (std::find(r.hypothesis.begin(), r.hypothesis.end(), *x) == r.hypothesis.end()) r.hypothesis.push_back(*x);
  }
  t.note("");
  return r;
}

// Runs an exact learner against epistemic oracles: MEM becomes K-membership,
// EQ(h) becomes one K-membership query per axiom of h followed by EX.
// `log` records the queries as the exact learner sees them.
template <typename Ex>
class ExactViaEpistemic : public ExactTeacher<Ex> {
 public:
  ExactViaEpistemic(EpistemicTeacher<Ex>& inner, Agent j, std::function<std::string(const Ex&)> show)
      : inner_(inner), j_(std::move(j)), show_(std::move(show)) {}

  bool mem(const Ex& x) override {
    bool yes = inner_.kmem(x, j_);
    log_.add({"mem", "", {show_(x)}, yes ? "yes" : "no", note_});
    return yes;
  }

  std::optional<Ex> eq(const std::vector<Ex>& h) override {
    inner_.note(note_.empty() ? "eq" : note_ + "/eq");
    for (const auto& x : h) inner_.kmem(x, j_);
    inner_.note(note_);
    std::optional<Ex> out = inner_.ex(j_);
    TranscriptEntry e{"eq", "", {}, out ? show_(*out) : "yes", note_};
    for (const auto& x : h) e.input.push_back(show_(x));
    log_.add(std::move(e));
    return out;
  }

  void note(std::string n) override {
    note_ = n;
    inner_.note(std::move(n));
  }

  const Transcript& log() const { return log_; }

 private:
  EpistemicTeacher<Ex>& inner_;
  Agent j_;
  std::function<std::string(const Ex&)> show_;
  Transcript log_;
  std::string note_;
};

// Runs an epistemic learner against exact oracles, keeping the sets s^K
// (agent, example) and s^L (examples) of everything communicated.
template <typename Ex>
class EpistemicViaExact : public EpistemicTeacher<Ex> {
 public:
  EpistemicViaExact(ExactTeacher<Ex>& inner, std::function<std::string(const Ex&)> show)
      : inner_(inner), show_(std::move(show)) {}

  bool kmem(const Ex& x, const Agent& j) override {
    bool yes = inner_.mem(x);
    if (yes) record(x, j);
    log_.add({"kmem", j, {show_(x)}, yes ? "yes" : "no", note_});
    return yes;
  }

  std::optional<Ex> ex(const Agent& j) override {
    std::optional<Ex> out = inner_.eq(s_l_);
    if (out) record(*out, j);
    log_.add({"ex", j, {}, out ? show_(*out) : "finished", note_});
    return out;
  }

  void note(std::string n) override {
    note_ = n;
    inner_.note(std::move(n));
  }

  const std::vector<Ex>& s_l() const { return s_l_; }
  const std::vector<std::pair<Agent, Ex>>& s_k() const { return s_k_; }
  const Transcript& log() const { return log_; }

 private:
  void record(const Ex& x, const Agent& j) {
    if (std::find(s_l_.begin(), s_l_.end(), x) == s_l_.end()) s_l_.push_back(x);
    std::pair<Agent, Ex> kx{j, x};
    if (std::find(s_k_.begin(), s_k_.end(), kx) == s_k_.end()) s_k_.push_back(kx);
  }

  ExactTeacher<Ex>& inner_;
  std::function<std::string(const Ex&)> show_;
  std::vector<Ex> s_l_;
  std::vector<std::pair<Agent, Ex>> s_k_;
  Transcript log_;
  std::string note_;
};

// ---- EL instantiation

struct LearnerBudget {
  std::size_t sigma_size = 0;       // |Σ_O|
  std::size_t largest_concept = 0;  // |C_O|
  std::size_t exponent = 0;         // ♯_O = 2·|C_O|·|Σ_O| + 2
  int max_queries = -1;             // negative: unlimited
};

LearnerBudget learner_budget(const std::vector<ElAxiom>& ontology, int max_queries);

// Named form: at least one side of every inclusion is a concept name.
bool is_named_form(const ElAxiom& a);

// All concepts over the names and roles of sig with size at most max_size,
// ordered by size then text.
std::vector<Concept> concepts_up_to(const Signature& sig, std::size_t max_size);

// Σ-assertions: A(a) and r(a, b) over the names of sig.
std::vector<ElAxiom> sigma_assertions(const Signature& sig);

// Target axioms, Σ-assertions, and every named-form inclusion whose other
// side has size at most max_size.
std::vector<ElAxiom> el_pool(const std::vector<ElAxiom>& target, const Signature& sig, std::size_t max_size);

// Initial candidates: Σ-assertions and A <= B for distinct names. Refinement
// of C <= D: A <= D' and C' <= A for every concept name A and subconcepts
// C' of C, D' of D.
ProbePlan<ElAxiom> terminology_plan(const Signature& sig);

// The terminology learner (epistemic side) run against an oracle.
LearnResult<ElAxiom> learn_terminology(const Signature& sig, EpistemicTeacher<ElAxiom>& t, const Agent& j = "1");

// ---- Propositional separation experiment

struct Thm2Framework {
  PropBackend backend;
  PropFormula target = PropFormula::True();  // p -> q
  std::vector<PropFormula> weak;    // p & p^l1_1 & ... & p^ln_n -> q, one per bit pattern
};

Thm2Framework thm2_framework(int n);

struct Thm2Counts {
  int n = 0;
  int ex_queries = 0;  // every EX call, including the final "you finished"
  int weak_examples = 0;
  int eq_queries = 0;
  Transcript ex_transcript;
  Transcript eq_transcript;
};

Thm2Counts run_thm2(int n, std::uint64_t seed);

}  // namespace elkat
