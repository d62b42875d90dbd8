#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "urforce/formula.hpp"
#include "urforce/name.hpp"

namespace urforce {

// A generic extension at desk scale: the interpretations of every pool name
// under one generic filter.
struct Extension {
  Filter generic;
  std::vector<HfuValue> values;                 // sorted unique
  std::map<std::string, HfuValue> valuation;    // name repr -> value
};

struct ExtensionCheck {
  std::string item;
  bool ok = true;
  bool applicable = true;
  std::string detail;
};

struct ExtensionReport {
  std::vector<ExtensionCheck> checks;
  bool all_ok() const;
};

// Builds the extension and verifies the finite-scale ground/extension facts:
// check-name values land in the extension, the filter name (when pooled)
// interprets as the encoded filter, the value set is transitive, urelements
// downstairs and upstairs coincide, interpretation shrinks kernels, and every
// urelement set upstairs is covered by a ground one.
std::pair<Extension, ExtensionReport> build_extension(const NamePool& pool, const Filter& g);

// Truth of a closed formula in an extension. Quantifiers range over the
// extension's value set; constants not in the pool are interpreted directly.
bool satisfies(const Poset& p, const Extension& ext, const Formula& f);

// Shared evaluator for one pool: the syntactic relation (eight recursive
// clauses, memoized) and the semantic relation (truth in every extension by
// a generic filter containing the condition).
class ForcingEngine {
 public:
  explicit ForcingEngine(NamePool pool);

  const NamePool& pool() const { return pool_; }
  const Poset& poset() const { return pool_.poset(); }
  const std::vector<Filter>& generics() const { return generics_; }
  const Extension& extension(std::size_t gi);

  bool star(const std::string& p, const Formula& f);
  bool semantic(const std::string& p, const Formula& f);
  bool sat_at(std::size_t gi, const Formula& f);

 private:
  bool star_i(int p, const Formula& f);
  bool star_atom(int p, AtomKind k, const PName& x1, const PName& x2);
  bool dense_below(int p, const std::vector<bool>& d) const;
  const PName& const_name(const Term& t) const;

  NamePool pool_;
  std::vector<Filter> generics_;
  std::vector<std::optional<Extension>> extensions_;
  std::unordered_map<std::string, bool> star_memo_;  // "<p>|<formula repr>"
  std::unordered_map<std::string, bool> sat_memo_;   // "<gi>|<formula repr>"
};

bool forces_star(const NamePool& pool, const std::string& p, const Formula& f);
bool forces_semantic(const NamePool& pool, const std::string& p, const Formula& f);

struct ForcingCounterexample {
  std::string kind;     // "star-vs-semantic" | "truth-lemma"
  std::string where;    // condition id or generic filter rendering
  std::string formula;  // repr
  bool lhs = false, rhs = false;
};

struct TheoremReport {
  std::size_t checked = 0;
  std::vector<ForcingCounterexample> counterexamples;
  bool ok() const { return counterexamples.empty(); }
};

// For every condition and formula: syntactic iff semantic forcing; for every
// generic filter and formula: truth in the extension iff some member of the
// filter forces it.
TheoremReport check_forcing_theorem(const NamePool& pool, const std::vector<Formula>& formulas);
TheoremReport check_forcing_theorem(ForcingEngine& eng, const std::vector<Formula>& formulas);

struct WitnessResult {
  std::optional<PName> name;
  std::string note;
};

// Given p forcing ∃x φ, finds a maximal antichain of conditions below p each
// forcing φ at some pool name, and mixes those names into a single witness.
// Returns no name (with a note) when some condition below p has no pool-name
// witness, rather than inventing one.
WitnessResult find_witness(const NamePool& pool, const std::string& p, const Formula& exists_phi);
WitnessResult find_witness(ForcingEngine& eng, const std::string& p, const Formula& exists_phi);

// The older calculus only gets the semantic relation: truth under every
// generic filter containing the condition, with quantifiers ranging over the
// legacy pool's interpretations.
bool legacy_forces_semantic(const Poset& p, const std::vector<LegacyName>& pool,
                            const std::string& cond, const Formula& f);

}  // namespace urforce
