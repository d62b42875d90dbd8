#include "urforce/urforce_c.h"

#include <cstdlib>
#include <cstring>
#include <functional>

#include "urforce/diagram.hpp"
#include "urforce/suites.hpp"

using namespace urforce;

struct urf_session {
  Session session;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const std::string& s) {
  if (out) *out = dup_string(s);
}

int run_guarded(char** out, const std::function<json()>& body) {
  try {
    emit(out, body().dump());
    return URF_OK;
  } catch (const Error& e) {
    json err;
    err["error"] = e.what();
    err["code"] = static_cast<int>(e.code());
    emit(out, err.dump());
    return static_cast<int>(e.code());
  } catch (const json::exception& e) {
    json err;
    err["error"] = e.what();
    err["code"] = URF_PARSE;
    emit(out, err.dump());
    return URF_PARSE;
  } catch (const std::exception& e) {
    json err;
    err["error"] = e.what();
    err["code"] = URF_INVALID;
    emit(out, err.dump());
    return URF_INVALID;
  }
}

// Payload dispatch for "validate": a poset, a name, a legacy name or an
// ideal, recognized by shape. Invalid objects return URF_INVALID with the
// violation report in the output.
int cmd_validate(urf_session* s, const json& req, char** out) {
  json payload = req.contains("payload") ? req.at("payload") : json();
  try {
    json report;
    bool ok = false;
    if (payload.is_object() && payload.contains("elements")) {
      std::vector<std::string> elements;
      for (const auto& e : payload.at("elements")) elements.push_back(e.get<std::string>());
      std::vector<std::pair<std::string, std::string>> pairs;
      if (payload.contains("leq"))
        for (const auto& pr : payload.at("leq"))
          pairs.emplace_back(pr.at(0).get<std::string>(), pr.at(1).get<std::string>());
      PosetCheck check = Poset::validate(elements, pairs, payload.value("top", ""));
      report = poset_check_to_json(check);
      ok = check.ok;
    } else if (payload.is_object() && payload.contains("pname")) {
      PName n = pname_from_json(payload);
      ValidityReport check = is_valid_name(s->session.require_poset(), n);
      report = validity_report_to_json(check);
      ok = check.ok;
    } else if (payload.is_object() && (payload.contains("lname") || payload.contains("ur"))) {
      lname_from_json(payload);  // shape check only; the calculus has no side condition
      report["ok"] = true;
      ok = true;
    } else if (payload.is_object() && payload.contains("family")) {
      IdealCheck check = is_a_ideal(ideal_from_json(payload));
      report = ideal_check_to_json(check);
      ok = check.ok;
    } else {
      fail_parse("payload is not a poset, name, legacy name or ideal");
    }
    emit(out, report.dump());
    return ok ? URF_OK : URF_INVALID;
  } catch (const Error& e) {
    json err;
    err["error"] = e.what();
    err["code"] = static_cast<int>(e.code());
    emit(out, err.dump());
    return static_cast<int>(e.code());
  } catch (const json::exception& e) {
    json err;
    err["error"] = e.what();
    err["code"] = URF_PARSE;
    emit(out, err.dump());
    return URF_PARSE;
  }
}

NamePool pool_for_constants(const Session& session, const Poset& p,
                            const std::vector<PName>& extra) {
  std::vector<PName> seeds;
  for (const auto& [_, n] : session.names) seeds.push_back(n);
  seeds.insert(seeds.end(), extra.begin(), extra.end());
  return close_pool(p, seeds, session.config.budget);
}

int cmd_check(urf_session* s, const json& req, char** out) {
  const std::string suite = req.value("suite", "all");
  SuiteConfig cfg;
  cfg.session = &s->session;
  cfg.budget = s->session.config.budget;
  if (s->session.config.depth) {
    cfg.gen.depth = *s->session.config.depth;
    cfg.gen.quantifiers = std::min(2, std::max(1, *s->session.config.depth));
  }
  try {
    json reports = json::array();
    bool ok = true;
    if (suite == "all") {
      for (const auto& r : run_all_suites(cfg)) {
        reports.push_back(r.to_json());
        ok = ok && r.ok();
      }
    } else {
      SuiteReport r = run_suite_by_name(suite, cfg);
      reports.push_back(r.to_json());
      ok = r.ok();
    }
    json result;
    result["reports"] = std::move(reports);
    result["ok"] = ok;
    emit(out, result.dump());
    return ok ? URF_OK : URF_INVALID;
  } catch (const Error& e) {
    json err;
    err["error"] = e.what();
    err["code"] = static_cast<int>(e.code());
    emit(out, err.dump());
    return static_cast<int>(e.code());
  }
}

}  // namespace

urf_session* urf_session_new(void) { return new urf_session(); }

void urf_session_free(urf_session* s) { delete s; }

int urf_session_load(urf_session* s, const char* session_json, char** out_err) {
  if (!s || !session_json) return URF_USAGE;
  try {
    s->session = Session::from_json(json::parse(session_json));
    return URF_OK;
  } catch (const Error& e) {
    emit(out_err, e.what());
    return static_cast<int>(e.code());
  } catch (const json::exception& e) {
    emit(out_err, e.what());
    return URF_PARSE;
  }
}

int urf_session_set_budget(urf_session* s, unsigned long long budget) {
  if (!s || budget == 0) return URF_USAGE;
  s->session.config.budget = static_cast<std::size_t>(budget);
  return URF_OK;
}

int urf_session_set_depth(urf_session* s, int depth) {
  if (!s || depth < 0) return URF_USAGE;
  s->session.config.depth = depth;
  return URF_OK;
}

int urf_eval(urf_session* s, const char* request_json, char** out_json) {
  if (!s || !request_json) return URF_USAGE;
  json req;
  try {
    req = json::parse(request_json);
  } catch (const json::exception& e) {
    json err;
    err["error"] = e.what();
    err["code"] = URF_PARSE;
    emit(out_json, err.dump());
    return URF_PARSE;
  }
  const std::string cmd = req.value("cmd", "");
  if (cmd == "validate") return cmd_validate(s, req, out_json);
  if (cmd == "check") return cmd_check(s, req, out_json);

  return run_guarded(out_json, [&]() -> json {
    const Session& session = s->session;
    if (cmd == "value") {
      const Poset& p = session.require_poset();
      PName n = pname_from_json(req.at("name"));
      Filter g = filter_from_json(req.at("filter"));
      if (!is_filter(p, g)) fail_invalid("not a filter on the session poset");
      auto validity = is_valid_name(p, n);
      if (!validity.ok) fail_invalid("not a valid name");
      return value_to_json(valuate(p, n, g));
    }
    if (cmd == "forces") {
      const Poset& p = session.require_poset();
      Formula f = formula_from_json(req.at("formula"));
      std::vector<PName> constants;
      f.collect_constants(constants);
      NamePool pool = pool_for_constants(session, p, constants);
      const std::string cond = req.at("p").get<std::string>();
      const std::string mode = req.value("mode", "star");
      bool result = false;
      if (mode == "star")
        result = forces_star(pool, cond, f);
      else if (mode == "semantic")
        result = forces_semantic(pool, cond, f);
      else
        fail_usage("mode must be star or semantic");
      json j;
      j["forces"] = result;
      return j;
    }
    if (cmd == "generics") {
      Poset p = req.contains("poset") ? poset_from_json(req.at("poset"))
                                      : session.require_poset();
      json filters = json::array();
      for (const auto& g : generic_filters(p)) filters.push_back(filter_to_json(g));
      return filters;
    }
    if (cmd == "mix") {
      const Poset& p = session.require_poset();
      if (!req.contains("map") || !req.at("map").is_object())
        fail_parse("mix needs a map from conditions to names");
      std::vector<std::pair<std::string, PName>> f;
      for (const auto& [cond, payload] : req.at("map").items())
        f.emplace_back(cond, pname_from_json(payload));
      return pname_to_json(mix(p, f));
    }
    if (cmd == "purify") {
      const Poset& p = session.require_poset();
      PName n = pname_from_json(req.at("name"));
      std::vector<std::string> keep;
      for (const auto& u : req.at("keep")) keep.push_back(u.get<std::string>());
      return pname_to_json(purify(p, n, keep));
    }
    if (cmd == "setpart") {
      const Poset& p = session.require_poset();
      return pname_to_json(set_counterpart(p, pname_from_json(req.at("name"))));
    }
    if (cmd == "j") {
      const Poset& p = session.require_poset();
      return pname_to_json(embed_j(p, lname_from_json(req.at("name"))));
    }
    if (cmd == "extension") {
      const Poset& p = session.require_poset();
      NamePool pool = pool_for_constants(session, p, {});
      Filter g = filter_from_json(req.at("filter"));
      auto [ext, report] = build_extension(pool, g);
      json values = json::array();
      for (const auto& v : ext.values) values.push_back(value_to_json(v));
      json j;
      j["values"] = std::move(values);
      j["report"] = extension_report_to_json(report);
      return j;
    }
    if (cmd == "ultrapower") {
      UltrapowerInput input = ultrapower_from_json(req.at("input"));
      Formula phi = formula_from_json(req.at("formula"));
      LosResult r = internal_ultrapower(input.functions, input.filter, phi);
      json j;
      j["quotient"] = r.quotient_side;
      j["pointwise"] = r.pointwise_side;
      j["agree"] = r.quotient_side == r.pointwise_side;
      return j;
    }
    if (cmd == "diagram") {
      const std::string format = req.value("format", "json");
      if (format == "dot") {
        json j;
        j["dot"] = diagram_dot();
        return j;
      }
      json edges = json::array();
      for (const auto& e : hierarchy_edges())
        edges.push_back({{"from", e.from}, {"to", e.to}, {"citation", e.citation}});
      return edges;
    }
    fail_usage("unknown command: " + cmd);
  });
}

void urf_free(char* p) { std::free(p); }

const char* urf_status_name(int code) {
  switch (code) {
    case URF_OK: return "ok";
    case URF_INVALID: return "invalid";
    case URF_PARSE: return "parse-error";
    case URF_BUDGET: return "budget-exceeded";
    case URF_USAGE: return "usage-error";
  }
  return "unknown";
}
