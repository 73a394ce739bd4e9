#include "elkat/json_io.h"

namespace elkat {

namespace {

Json pairs(const std::set<ElementPair>& ps) {
  Json out = Json::array();
  for (const auto& [a, b] : ps) out.push_back({a, b});
  return out;
}

std::set<ElementPair> pairs_from(const Json& j, const std::string& what) {
  if (!j.is_array()) throw MalformedStructure(what + " must be an array of pairs");
  std::set<ElementPair> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
      throw MalformedStructure(what + " must hold [i, j] integer pairs");
    }
    out.insert({p[0].get<int>(), p[1].get<int>()});
  }
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw MalformedStructure(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<std::string> texts(const std::vector<ElLiteral>& lits) {
  std::vector<std::string> out;
  for (const auto& l : lits) out.push_back(to_string(l));
  return out;
}

}  // namespace

Json to_json(const ElInterpretation& interp) {
  Json domain = Json::array();
  for (int d = 0; d < interp.domain_size; ++d) domain.push_back(d);
  Json concepts = Json::object();
  for (const auto& [name, ext] : interp.concepts) concepts[name] = Json(std::vector<int>(ext.begin(), ext.end()));
  Json roles = Json::object();
  for (const auto& [name, ext] : interp.roles) roles[name] = pairs(ext);
  Json individuals = Json::object();
  for (const auto& [name, d] : interp.individuals) individuals[name] = d;
  return {{"domain", domain}, {"concepts", concepts}, {"roles", roles}, {"individuals", individuals}};
}

Json to_json(const PointedElk& model) {
  Json worlds = Json::array();
  for (const auto& w : model.structure.worlds) worlds.push_back(to_json(w));
  Json relations = Json::object();
  for (const auto& [agent, rel] : model.structure.relations) relations[agent] = pairs(rel);
  return {{"worlds", worlds}, {"relations", relations}, {"point", model.point}};
}

Json to_json(const FailingCheck& check) {
  Json out = {{"condition", check.condition}};
  if (check.condition == 1) {
    out["literals"] = texts(check.body);
  } else {
    out["sigma"] = check.sigma;
    out["body"] = texts(check.body);
    out["pool"] = texts(check.pool);
  }
  return out;
}

Json to_json(const SatVerdict& verdict) {
  return {{"sat", verdict.satisfiable},
          {"witness", verdict.witness ? to_json(*verdict.witness) : Json(nullptr)},
          {"failing_check", verdict.failing_check ? to_json(*verdict.failing_check) : Json(nullptr)}};
}

Json to_json(const Transcript& transcript) {
  Json entries = Json::array();
  for (const auto& e : transcript.entries) {
    Json x = {{"kind", e.kind}, {"input", e.input}, {"answer", e.answer}};
    if (!e.agent.empty()) x["agent"] = e.agent;
    if (!e.note.empty()) x["note"] = e.note;
    entries.push_back(std::move(x));
  }
  return {{"entries", entries}, {"counts", transcript.counts}, {"total", transcript.total()}};
}

Json to_json(const Thm2Counts& counts) {
  return {{"n", counts.n},
          {"ex_queries", counts.ex_queries},
          {"weak_examples", counts.weak_examples},
          {"eq_queries", counts.eq_queries}};
}

ElInterpretation el_interpretation_from_json(const Json& j) {
  ElInterpretation out;
  const Json& domain = field(j, "domain");
  if (!domain.is_array() || domain.empty()) throw MalformedStructure("domain must be a non-empty array");
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (!domain[i].is_number_integer() || domain[i].get<int>() != static_cast<int>(i)) {
      throw MalformedStructure("domain must be [0, 1, ..., n-1]");
    }
  }
  out.domain_size = static_cast<int>(domain.size());
  if (j.contains("concepts")) {
    for (const auto& [name, ext] : field(j, "concepts").items()) {
      if (!ext.is_array()) throw MalformedStructure("extension of " + name + " must be an array");
      auto& set = out.concepts[name];
      for (const auto& d : ext) {
        if (!d.is_number_integer()) throw MalformedStructure("extension of " + name + " must hold integers");
        set.insert(d.get<int>());
      }
    }
  }
  if (j.contains("roles")) {
    for (const auto& [name, ext] : field(j, "roles").items()) out.roles[name] = pairs_from(ext, "role " + name);
  }
  if (j.contains("individuals")) {
    for (const auto& [name, d] : field(j, "individuals").items()) {
      if (!d.is_number_integer()) throw MalformedStructure("individual " + name + " must map to an integer");
      out.individuals[name] = d.get<int>();
    }
  }
  out.validate();
  return out;
}

PointedElk pointed_elk_from_json(const Json& j) {
  PointedElk out;
  const Json& worlds = field(j, "worlds");
  if (!worlds.is_array() || worlds.empty()) throw MalformedStructure("worlds must be a non-empty array");
  for (const auto& w : worlds) out.structure.worlds.push_back(el_interpretation_from_json(w));
  for (const auto& [agent, rel] : field(j, "relations").items()) {
    out.structure.relations[agent] = pairs_from(rel, "relation " + agent);
  }
  const Json& point = field(j, "point");
  if (!point.is_number_integer()) throw MalformedStructure("point must be an integer");
  out.point = point.get<int>();
  if (out.point < 0 || out.point >= out.structure.num_worlds()) throw MalformedStructure("point out of range");
  out.structure.validate();
  return out;
}

}  // namespace elkat
