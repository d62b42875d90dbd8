#pragma once

#include <string>
#include <vector>

#include "urforce/forcing.hpp"
#include "urforce/json_io.hpp"
#include "urforce/session.hpp"

namespace urforce {

struct SuiteReport {
  std::string suite;
  std::size_t checked = 0;
  json counterexamples = json::array();

  bool ok() const { return counterexamples.empty(); }
  json to_json() const;
};

struct SuiteConfig {
  GenConfig gen{2, 2, 200000};
  std::size_t budget = kDefaultBudget;
  std::size_t mixture_samples = 500;
  const Session* session = nullptr;  // extra instances, when present
};

// Built-in instance families: small posets (all at most four conditions,
// including the two-atom fork and the one-bit partial-function poset), seed
// names of rank at most two over three urelements, and every pool closure of
// at most three seeds.
const std::vector<std::pair<std::string, Poset>>& catalog_posets();
const std::vector<std::string>& catalog_urelements();
std::vector<PName> seed_catalog(const Poset& p, const std::vector<std::string>& urs);
std::vector<NamePool> pool_catalog(const Poset& p, const std::vector<std::string>& urs,
                                   std::size_t budget = kDefaultBudget);

SuiteReport run_forcing_theorem_suite(const SuiteConfig& cfg);
SuiteReport run_mixture_suite(const SuiteConfig& cfg);
SuiteReport run_kernel_suite(const SuiteConfig& cfg);
SuiteReport run_appendix_suite(const SuiteConfig& cfg);
SuiteReport run_legacy_fullness_suite();  // CLI suite name: remark33
SuiteReport run_ultrapower_suite(const SuiteConfig& cfg);  // CLI suite name: los
SuiteReport run_ideal_suite(const SuiteConfig& cfg);

// Filters meeting every dense set coincide with the atom-principal filters,
// on every labeled poset with at most `max_elements` conditions.
SuiteReport run_genericity_suite(int max_elements = 5);

// The seven named suites in order; stops collecting per suite, not globally.
std::vector<SuiteReport> run_all_suites(const SuiteConfig& cfg);

// Lookup by CLI token; throws Errc::usage on unknown names.
SuiteReport run_suite_by_name(const std::string& name, const SuiteConfig& cfg);

}  // namespace urforce
