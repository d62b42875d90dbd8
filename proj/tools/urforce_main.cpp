// Command-line front end. Builds JSON requests from files or inline JSON and
// hands them to the shared library through the C surface.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif

#include "urforce/urforce_c.h"

using nlohmann::json;

namespace {

constexpr int kUsageExit = 4;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    std::exit(kUsageExit);
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

bool looks_like_path(const std::string& arg) {
  std::ifstream probe(arg);
  return probe.good();
}

// An argument is a session name reference (@label), a file path, or inline
// JSON.
json payload_arg(const std::string& arg, const json& session_names) {
  if (!arg.empty() && arg[0] == '@') {
    const std::string label = arg.substr(1);
    if (!session_names.contains(label)) {
      std::cerr << "unknown session name: " << label << "\n";
      std::exit(kUsageExit);
    }
    return session_names.at(label);
  }
  const std::string text = looks_like_path(arg) ? slurp(arg) : arg;
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    std::cerr << "cannot parse argument as JSON: " << e.what() << "\n";
    std::exit(2);
  }
}

struct Cli {
  urf_session* session = urf_session_new();
  json session_names = json::object();
  bool pretty = false;

  ~Cli() { urf_session_free(session); }

  void load_session(const std::string& path) {
    const std::string text = slurp(path);
    char* err = nullptr;
    int rc = urf_session_load(session, text.c_str(), &err);
    if (rc != URF_OK) {
      std::cerr << "session: " << (err ? err : "load failed") << "\n";
      urf_free(err);
      std::exit(rc);
    }
    urf_free(err);
    try {
      json parsed = json::parse(text);
      if (parsed.contains("names")) session_names = parsed.at("names");
    } catch (const json::exception&) {
    }
  }

  int run(const json& request) {
    char* out = nullptr;
    int rc = urf_eval(session, request.dump().c_str(), &out);
    if (out) {
      try {
        json parsed = json::parse(out);
        std::cout << (pretty ? parsed.dump(2) : parsed.dump()) << "\n";
      } catch (const json::exception&) {
        std::cout << out << "\n";
      }
    }
    urf_free(out);
    return rc;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite forcing laboratory over urelement universes"};
  app.require_subcommand(1);
  app.fallthrough();

  Cli cli;
  std::string session_path;
  unsigned long long budget = 0;
  int depth = -1;
  app.add_option("--session", session_path, "session JSON file");
  app.add_option("--budget", budget, "size budget for enumerated collections");
  app.add_option("--depth", depth, "formula generation depth");
  app.add_flag("--pretty", cli.pretty, "indent JSON output");

  std::string validate_arg;
  auto* validate = app.add_subcommand("validate", "check a poset, name or ideal");
  validate->add_option("payload", validate_arg, "file, inline JSON or @name")->required();

  std::string value_name, value_filter;
  auto* value = app.add_subcommand("value", "interpret a name under a filter");
  value->add_option("name", value_name)->required();
  value->add_option("filter", value_filter)->required();

  std::string forces_p, forces_formula;
  bool forces_star_flag = false, forces_semantic_flag = false;
  auto* forces = app.add_subcommand("forces", "evaluate the forcing relation");
  forces->add_option("p", forces_p)->required();
  forces->add_option("formula", forces_formula)->required();
  forces->add_flag("--star", forces_star_flag, "syntactic relation");
  forces->add_flag("--semantic", forces_semantic_flag, "semantic relation");

  std::string generics_poset;
  auto* generics = app.add_subcommand("generics", "list the generic filters");
  generics->add_option("poset", generics_poset, "poset file (defaults to the session's)");

  std::string mix_arg;
  auto* mixcmd = app.add_subcommand("mix", "mix names over an antichain");
  mixcmd->add_option("map", mix_arg, "object {condition: pname}")->required();

  std::string purify_name, purify_keep;
  auto* purifycmd = app.add_subcommand("purify", "drop urelement entries outside a set");
  purifycmd->add_option("name", purify_name)->required();
  purifycmd->add_option("keep", purify_keep, "JSON array of urelement ids")->required();

  std::string setpart_name;
  auto* setpart = app.add_subcommand("setpart", "set-shaped companion of a name");
  setpart->add_option("name", setpart_name)->required();

  std::string j_name;
  auto* jcmd = app.add_subcommand("j", "embed a legacy name");
  jcmd->add_option("name", j_name)->required();

  std::string ext_filter;
  auto* extension = app.add_subcommand("extension", "build an extension and its report");
  extension->add_option("filter", ext_filter)->required();

  std::string up_input, up_formula;
  auto* ultrapower = app.add_subcommand("ultrapower", "evaluate both sides of a quotient");
  ultrapower->add_option("input", up_input, "index, generator and function tables")->required();
  ultrapower->add_option("formula", up_formula)->required();

  std::string suite = "all";
  auto* check = app.add_subcommand("check", "run a verification suite");
  check->add_option("suite", suite,
                    "forcing-theorem|mixtures|kernel|appendix|remark33|los|ideals|all");

  std::string diagram_format = "json";
  auto* diagram = app.add_subcommand("diagram", "axiom implication diagram");
  diagram->add_option("--format", diagram_format, "json or dot");

  CLI11_PARSE(app, argc, argv);

  if (!session_path.empty()) cli.load_session(session_path);
  if (budget != 0 && urf_session_set_budget(cli.session, budget) != URF_OK) {
    std::cerr << "bad budget\n";
    return kUsageExit;
  }
  if (depth >= 0 && urf_session_set_depth(cli.session, depth) != URF_OK) {
    std::cerr << "bad depth\n";
    return kUsageExit;
  }

  json req;
  if (validate->parsed()) {
    req = {{"cmd", "validate"}, {"payload", payload_arg(validate_arg, cli.session_names)}};
  } else if (value->parsed()) {
    req = {{"cmd", "value"},
           {"name", payload_arg(value_name, cli.session_names)},
           {"filter", payload_arg(value_filter, cli.session_names)}};
  } else if (forces->parsed()) {
    if (forces_star_flag == forces_semantic_flag) {
      std::cerr << "pick exactly one of --star or --semantic\n";
      return kUsageExit;
    }
    req = {{"cmd", "forces"},
           {"p", forces_p},
           {"formula", payload_arg(forces_formula, cli.session_names)},
           {"mode", forces_star_flag ? "star" : "semantic"}};
  } else if (generics->parsed()) {
    req = {{"cmd", "generics"}};
    if (!generics_poset.empty()) req["poset"] = payload_arg(generics_poset, cli.session_names);
  } else if (mixcmd->parsed()) {
    req = {{"cmd", "mix"}, {"map", payload_arg(mix_arg, cli.session_names)}};
  } else if (purifycmd->parsed()) {
    req = {{"cmd", "purify"},
           {"name", payload_arg(purify_name, cli.session_names)},
           {"keep", payload_arg(purify_keep, cli.session_names)}};
  } else if (setpart->parsed()) {
    req = {{"cmd", "setpart"}, {"name", payload_arg(setpart_name, cli.session_names)}};
  } else if (jcmd->parsed()) {
    req = {{"cmd", "j"}, {"name", payload_arg(j_name, cli.session_names)}};
  } else if (extension->parsed()) {
    req = {{"cmd", "extension"}, {"filter", payload_arg(ext_filter, cli.session_names)}};
  } else if (ultrapower->parsed()) {
    req = {{"cmd", "ultrapower"},
           {"input", payload_arg(up_input, cli.session_names)},
           {"formula", payload_arg(up_formula, cli.session_names)}};
  } else if (check->parsed()) {
    req = {{"cmd", "check"}, {"suite", suite}};
  } else if (diagram->parsed()) {
    req = {{"cmd", "diagram"}, {"format", diagram_format}};
  }
  return cli.run(req);
}
