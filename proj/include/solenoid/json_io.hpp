#pragma once

// JSON (de)serialization for every value that crosses the tool boundary.
// Exact rationals travel as strings "p/q" (plain "p" when integral); big
// integers degrade to strings only when they leave the 53-bit window; keys
// are emitted in sorted order so dumps are deterministic byte for byte.
// Parsers throw std::invalid_argument on schema violations, which the
// command line reports as usage errors.

#include "solenoid/constructions.hpp"
#include "solenoid/finmodel.hpp"
#include "solenoid/grid.hpp"

#include "json.hpp"

namespace solenoid {

using Json = nlohmann::json;

// ---- scalars ----
Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json int_json(const Int& v);  // number when it fits exactly in a double
Int int_from_json(const Json& j);

// ---- group-side data ----
Json profile_json(const PrimeProfile& p);  // {"primes": {"2": "inf", "5": 2}}
PrimeProfile profile_from_json(const Json& j);

Json aadic_json(const AadicInteger& x);  // {"base": [2,3,4], "digits": [1,2,3]}
AadicInteger aadic_from_json(const Json& j);

Json group_json(const GroupTag& g);
GroupTag group_from_json(const Json& j);

Json subgroup_json(const SubgroupSpec& s);
SubgroupSpec subgroup_from_json(const Json& j);

// ---- characteristic functions: tagged-union tree keyed by "kind" ----
Json charfn_json(const CharFnExpr& f);
CharFnExpr charfn_from_json(const Json& j);  // rebuilds through the validating factories

// ---- equations, grids, models ----
Json equation_json(const EquationSpec& eq);
EquationSpec equation_from_json(const Json& j);

Json forms_json(const FormPair& forms);
FormPair forms_from_json(const Json& j);

Json grid_json(const GridSpec& g);
GridSpec grid_from_json(const Json& j);

Json model_json(const FiniteModel& m);  // {"Z": [8]}
FiniteModel model_from_json(const Json& j);

// ---- results and reports (one direction: out) ----
Json value_json(const CFValue& v);
Json witness_json(const Witness& w);
Json verification_json(const VerificationReport& r);
Json implication_json(const ImplicationReport& r);
Json classification_json(const Classification& c);
Json model_report_json(const ModelReport& r);
Json enumeration_json(const EnumerationReport& r);
Json crossvalidation_json(const CrossValidation& cv);
Json construction_json(const ConstructionResult& r);
Json pmf_json(const PMF& p);

// Report envelope: {"command", "config", "result", "meta"}.  Everything
// outside "meta" is a pure function of the config, so reruns reproduce the
// payload byte for byte; the timestamp lives only in "meta".
Json make_report(const std::string& command, Json config, Json result);

// Two-space indented dump with trailing newline; keys arrive sorted.
std::string dump_json(const Json& j);

}  // namespace solenoid
