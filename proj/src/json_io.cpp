#include "urforce/json_io.hpp"

namespace urforce {

namespace {

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail_parse(std::string("expected object with \"") + key + "\"");
  return j.at(key);
}

std::string need_string(const json& j, const char* what) {
  if (!j.is_string()) fail_parse(std::string("expected string for ") + what);
  return j.get<std::string>();
}

const json& need_array(const json& j, const char* what) {
  if (!j.is_array()) fail_parse(std::string("expected array for ") + what);
  return j;
}

}  // namespace

HfuValue value_from_json(const json& j) {
  if (j.is_object() && j.contains("ur")) return HfuValue::urelement(need_string(j.at("ur"), "ur id"));
  if (j.is_object() && j.contains("set")) {
    std::vector<HfuValue> members;
    for (const auto& m : need_array(j.at("set"), "set members")) members.push_back(value_from_json(m));
    return HfuValue::set(std::move(members));
  }
  fail_parse("value must be {\"ur\":...} or {\"set\":[...]}");
}

json value_to_json(const HfuValue& v) { return json::parse(v.repr()); }

PName pname_from_json(const json& j) {
  const json& entries = need_array(need(j, "pname"), "pname entries");
  std::vector<PName::Entry> es;
  for (const auto& pair : entries) {
    if (!pair.is_array() || pair.size() != 2) fail_parse("pname entry must be [entry, cond]");
    PName::Entry e;
    e.cond = need_string(pair.at(1), "condition id");
    const json& ent = pair.at(0);
    if (ent.is_object() && ent.contains("ur")) {
      e.is_ur = true;
      e.ur = need_string(ent.at("ur"), "ur id");
    } else {
      e.is_ur = false;
      e.sub = pname_from_json(ent);
    }
    es.push_back(std::move(e));
  }
  return PName::make(std::move(es));
}

json pname_to_json(const PName& n) { return json::parse(n.repr()); }

LegacyName lname_from_json(const json& j) {
  if (j.is_object() && j.contains("ur"))
    return LegacyName::urelement(need_string(j.at("ur"), "ur id"));
  const json& entries = need_array(need(j, "lname"), "lname entries");
  std::vector<LegacyName::Entry> es;
  for (const auto& pair : entries) {
    if (!pair.is_array() || pair.size() != 2) fail_parse("lname entry must be [entry, cond]");
    es.push_back({lname_from_json(pair.at(0)), need_string(pair.at(1), "condition id")});
  }
  return LegacyName::set(std::move(es));
}

json lname_to_json(const LegacyName& n) { return json::parse(n.repr()); }

Poset poset_from_json(const json& j) {
  std::vector<std::string> elements;
  for (const auto& e : need_array(need(j, "elements"), "elements"))
    elements.push_back(need_string(e, "element id"));
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("leq"))
    for (const auto& pr : need_array(j.at("leq"), "leq")) {
      if (!pr.is_array() || pr.size() != 2) fail_parse("leq entry must be [a, b]");
      pairs.emplace_back(need_string(pr.at(0), "leq id"), need_string(pr.at(1), "leq id"));
    }
  return Poset::make(std::move(elements), pairs, need_string(need(j, "top"), "top id"));
}

json poset_to_json(const Poset& p) {
  json j;
  j["elements"] = p.elements();
  json rel = json::array();
  for (const auto& a : p.elements())
    for (const auto& b : p.elements())
      if (a != b && p.leq(a, b)) rel.push_back(json::array({a, b}));
  j["leq"] = std::move(rel);
  j["top"] = p.top();
  return j;
}

Filter filter_from_json(const json& j) {
  std::vector<std::string> ms;
  for (const auto& m : need_array(j, "filter")) ms.push_back(need_string(m, "condition id"));
  return Filter(std::move(ms));
}

json filter_to_json(const Filter& f) { return json(f.members); }

namespace {

Term term_from_json(const json& j) {
  if (j.is_object() && j.contains("var")) return Term::var(need_string(j.at("var"), "var"));
  if (j.is_object() && j.contains("const")) return Term::constant(pname_from_json(j.at("const")));
  fail_parse("term must be {\"var\":...} or {\"const\":pname}");
}

}  // namespace

Formula formula_from_json(const json& j) {
  if (!j.is_object()) fail_parse("formula must be an object");
  if (j.contains("atom")) {
    const json& a = j.at("atom");
    return Formula::atom(atom_kind_from_token(need_string(need(a, "kind"), "atom kind")),
                         term_from_json(need(a, "lhs")), term_from_json(need(a, "rhs")));
  }
  if (j.contains("A")) return Formula::is_ur(term_from_json(j.at("A")));
  if (j.contains("not")) return Formula::neg(formula_from_json(j.at("not")));
  if (j.contains("and")) {
    const json& both = need_array(j.at("and"), "conjuncts");
    if (both.size() != 2) fail_parse("\"and\" takes exactly two formulas");
    return Formula::conj(formula_from_json(both.at(0)), formula_from_json(both.at(1)));
  }
  if (j.contains("exists")) {
    const json& e = j.at("exists");
    return Formula::exists(need_string(need(e, "var"), "var"),
                           formula_from_json(need(e, "body")));
  }
  fail_parse("unknown formula shape");
}

json formula_to_json(const Formula& f) { return json::parse(f.repr()); }

Ideal ideal_from_json(const json& j) {
  Ideal out;
  for (const auto& u : need_array(need(j, "pool"), "pool"))
    out.pool.push_back(need_string(u, "urelement id"));
  for (const auto& s : need_array(need(j, "family"), "family")) {
    std::vector<std::string> set;
    for (const auto& u : need_array(s, "family member")) set.push_back(need_string(u, "urelement id"));
    out.family.push_back(std::move(set));
  }
  out.normalize();
  return out;
}

json ideal_to_json(const Ideal& i) {
  json j;
  j["pool"] = i.pool;
  j["family"] = i.family;
  return j;
}

UltrapowerInput ultrapower_from_json(const json& j) {
  UltrapowerInput out;
  for (const auto& i : need_array(need(j, "index"), "index"))
    out.filter.index.push_back(need_string(i, "index element"));
  out.filter.generator = need_string(need(j, "generator"), "generator");
  const json& fns = need(j, "functions");
  if (!fns.is_object()) fail_parse("\"functions\" must map names to tables");
  for (const auto& [name, table] : fns.items()) {
    if (!table.is_object()) fail_parse("function table must map index points to values");
    std::map<std::string, HfuValue> t;
    for (const auto& [point, value] : table.items()) t.emplace(point, value_from_json(value));
    out.functions.emplace_back(name, std::move(t));
  }
  return out;
}

json validity_report_to_json(const ValidityReport& r) {
  json j;
  j["ok"] = r.ok;
  if (r.violation) {
    j["violation"] = {{"path", json::parse(r.violation->path)},
                      {"first", r.violation->first},
                      {"second", r.violation->second}};
  }
  return j;
}

json poset_check_to_json(const PosetCheck& c) {
  json j;
  j["ok"] = c.ok;
  if (!c.ok) {
    j["law"] = c.law;
    j["witnesses"] = c.witnesses;
  }
  return j;
}

json ideal_check_to_json(const IdealCheck& c) {
  json j;
  j["ok"] = c.ok;
  if (!c.ok) {
    j["condition"] = c.condition;
    j["detail"] = c.detail;
  }
  return j;
}

json extension_report_to_json(const ExtensionReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json item;
    item["item"] = c.item;
    item["ok"] = c.ok;
    item["applicable"] = c.applicable;
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(std::move(item));
  }
  json j;
  j["ok"] = r.all_ok();
  j["checks"] = std::move(checks);
  return j;
}

json theorem_report_to_json(const TheoremReport& r) {
  json ces = json::array();
  for (const auto& c : r.counterexamples) {
    json item;
    item["kind"] = c.kind;
    item["where"] = c.where;
    item["formula"] = json::parse(c.formula);
    item["lhs"] = c.lhs;
    item["rhs"] = c.rhs;
    ces.push_back(std::move(item));
  }
  json j;
  j["checked"] = r.checked;
  j["counterexamples"] = std::move(ces);
  j["ok"] = r.ok();
  return j;
}

}  // namespace urforce
