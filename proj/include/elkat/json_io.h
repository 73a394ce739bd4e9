// JSON forms of models, verdicts and learning transcripts.
//
//   interpretation: {domain:[0..n-1], concepts:{A:[d..]}, roles:{r:[[d,e]..]}, individuals:{a:d}}
//   kripke:         {worlds:[interpretation..], relations:{agent:[[i,j]..]}, point:i}
//   verdict:        {sat, witness: kripke|null, failing_check: {...}|null}

#pragma once

#include "json.hpp"

#include "elkat/elk_sat.h"
#include "elkat/interpretation.h"
#include "elkat/learning.h"

namespace elkat {

using Json = nlohmann::json;

Json to_json(const ElInterpretation& interp);
Json to_json(const PointedElk& model);
Json to_json(const FailingCheck& check);
Json to_json(const SatVerdict& verdict);
Json to_json(const Transcript& transcript);
Json to_json(const Thm2Counts& counts);

// Throw MalformedStructure on shape errors, InterpretationError on elements
// outside the domain.
ElInterpretation el_interpretation_from_json(const Json& j);
PointedElk pointed_elk_from_json(const Json& j);

}  // namespace elkat
