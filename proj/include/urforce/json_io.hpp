#pragma once

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif

#include "urforce/axioms.hpp"
#include "urforce/formula.hpp"
#include "urforce/forcing.hpp"
#include "urforce/name.hpp"

namespace urforce {

using json = nlohmann::json;

// Values: {"ur":"a"} | {"set":[...]}. Member order arbitrary on input,
// canonical on output.
HfuValue value_from_json(const json& j);
json value_to_json(const HfuValue& v);

// Names: {"pname":[[entry,"cond"],...]} with entry {"ur":...} or a nested
// pname; legacy names use {"ur":...} | {"lname":[[entry,"cond"],...]}.
PName pname_from_json(const json& j);
json pname_to_json(const PName& n);
LegacyName lname_from_json(const json& j);
json lname_to_json(const LegacyName& n);

// Posets: {"elements":[...], "leq":[["p","1"],...], "top":"1"}.
Poset poset_from_json(const json& j);
json poset_to_json(const Poset& p);

// Filters and other id sets travel as sorted arrays.
Filter filter_from_json(const json& j);
json filter_to_json(const Filter& f);

// Formulas: {"atom":{"kind":...,"lhs":t,"rhs":t}} | {"A":t} | {"not":f} |
// {"and":[f,f]} | {"exists":{"var":...,"body":f}}; terms {"var":...} |
// {"const":pname}.
Formula formula_from_json(const json& j);
json formula_to_json(const Formula& f);

// Ideals: {"pool":[...], "family":[[...],...]}.
Ideal ideal_from_json(const json& j);
json ideal_to_json(const Ideal& i);

// Ultrapower instances: {"index":[...], "generator":"i",
// "functions":{"f":{"i":<value>,...},...}}.
struct UltrapowerInput {
  Ultrafilter filter;
  std::vector<std::pair<std::string, std::map<std::string, HfuValue>>> functions;
};
UltrapowerInput ultrapower_from_json(const json& j);

json validity_report_to_json(const ValidityReport& r);
json poset_check_to_json(const PosetCheck& c);
json ideal_check_to_json(const IdealCheck& c);
json extension_report_to_json(const ExtensionReport& r);
json theorem_report_to_json(const TheoremReport& r);

}  // namespace urforce
