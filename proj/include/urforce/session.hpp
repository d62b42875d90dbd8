#pragma once

#include <map>
#include <optional>
#include <string>

#include "urforce/json_io.hpp"

namespace urforce {

struct Config {
  std::size_t budget = kDefaultBudget;
  std::optional<int> depth;  // formula generation depth; suites default it
};

// A loaded working context: the declared urelement pool, an optional poset,
// named name constants, and limits. Single file, reproducible invocations.
struct Session {
  std::vector<std::string> pool;
  std::optional<Poset> poset;
  std::map<std::string, PName> names;
  Config config;

  static Session from_json(const json& j);

  const Poset& require_poset() const;
  const PName& named(const std::string& label) const;
};

}  // namespace urforce
