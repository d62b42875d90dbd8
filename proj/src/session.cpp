#include "urforce/session.hpp"

#include <algorithm>

namespace urforce {

Session Session::from_json(const json& j) {
  Session s;
  if (!j.is_object()) fail_parse("session must be an object");
  if (j.contains("pool")) {
    if (!j.at("pool").is_array()) fail_parse("session pool must be an array of ids");
    for (const auto& u : j.at("pool")) {
      if (!u.is_string()) fail_parse("urelement ids are strings");
      s.pool.push_back(u.get<std::string>());
    }
    std::sort(s.pool.begin(), s.pool.end());
    if (std::unique(s.pool.begin(), s.pool.end()) != s.pool.end())
      fail_invalid("duplicate urelement id in pool");
  }
  if (j.contains("poset")) s.poset = poset_from_json(j.at("poset"));
  if (j.contains("names")) {
    if (!j.at("names").is_object()) fail_parse("session names must be an object");
    for (const auto& [label, payload] : j.at("names").items()) {
      PName n = pname_from_json(payload);
      if (s.poset) {
        auto report = is_valid_name(*s.poset, n);
        if (!report.ok) fail_invalid("session name " + label + " is not a valid name");
      }
      if (j.contains("pool"))
        for (const auto& u : n.kernel())
          if (!std::binary_search(s.pool.begin(), s.pool.end(), u))
            fail_invalid("session name " + label + " uses urelement " + u +
                         " outside the declared pool");
      s.names.emplace(label, std::move(n));
    }
  }
  if (j.contains("config")) {
    const json& c = j.at("config");
    if (c.contains("budget")) {
      const auto b = c.at("budget").get<long long>();
      if (b <= 0) fail_invalid("budget must be positive");
      s.config.budget = static_cast<std::size_t>(b);
    }
    if (c.contains("depth")) {
      const int d = c.at("depth").get<int>();
      if (d < 0) fail_invalid("depth must be non-negative");
      s.config.depth = d;
    }
  }
  return s;
}

const Poset& Session::require_poset() const {
  if (!poset) fail_usage("this command needs a session with a poset");
  return *poset;
}

const PName& Session::named(const std::string& label) const {
  auto it = names.find(label);
  if (it == names.end()) fail_usage("unknown session name: " + label);
  return it->second;
}

}  // namespace urforce
