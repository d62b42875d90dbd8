#pragma once

#include <stdexcept>
#include <string>

namespace urforce {

// Stable error codes; mirrored by the C API and the CLI exit codes.
enum class Errc : int {
  ok = 0,
  invalid = 1,  // domain violation (bad poset, bad name, counterexample input)
  parse = 2,    // malformed JSON or wrong payload shape
  budget = 3,   // enumeration exceeded the configured size budget
  usage = 4,    // bad arguments / unknown command
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail_invalid(const std::string& msg) { throw Error(Errc::invalid, msg); }
[[noreturn]] inline void fail_parse(const std::string& msg) { throw Error(Errc::parse, msg); }
[[noreturn]] inline void fail_budget(const std::string& msg) { throw Error(Errc::budget, msg); }
[[noreturn]] inline void fail_usage(const std::string& msg) { throw Error(Errc::usage, msg); }

inline constexpr std::size_t kDefaultBudget = 100000;

}  // namespace urforce
