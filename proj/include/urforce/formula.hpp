#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "urforce/name.hpp"

namespace urforce {

enum class AtomKind { member, equal, subset, aeq };

const char* atom_kind_token(AtomKind k);  // "in" | "eq" | "sub" | "aeq"
AtomKind atom_kind_from_token(const std::string& t);

// A term of the forcing language: a variable, a name constant, or (internal
// to the older-calculus harness) a legacy name constant.
class Term {
 public:
  enum class Kind { variable, name_const, legacy_const };

  static Term var(std::string v);
  static Term constant(PName n);
  static Term legacy(LegacyName n);

  Kind kind() const { return kind_; }
  const std::string& var_name() const { return var_; }
  const PName& name() const { return name_; }
  const LegacyName& legacy_name() const { return legacy_; }
  const std::string& repr() const { return repr_; }

 private:
  Kind kind_ = Kind::variable;
  std::string var_;
  PName name_;
  LegacyName legacy_;
  std::string repr_;
};

// Immutable formula trees over {member, equal, subset, aeq, urelement
// predicate} with negation, conjunction and existential quantification.
// Disjunction, implication and universal quantification are abbreviations the
// caller expands.
class Formula {
 public:
  enum class Kind { atom, is_ur, neg, conj, exists };

  static Formula atom(AtomKind k, Term lhs, Term rhs);
  static Formula is_ur(Term t);
  static Formula neg(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula exists(std::string var, Formula body);

  Kind kind() const;
  AtomKind atom_kind() const;
  const Term& lhs() const;
  const Term& rhs() const;
  const Term& arg() const;  // is_ur
  Formula child() const;    // neg, exists
  Formula left() const;
  Formula right() const;
  const std::string& var() const;

  const std::string& repr() const;
  int depth() const;  // connective/quantifier nesting; atoms are 0

  Formula substitute(const std::string& var, const Term& t) const;
  void collect_constants(std::vector<PName>& out) const;
  std::set<std::string> free_vars() const;

  bool operator==(const Formula& o) const { return repr() == o.repr(); }

 private:
  struct Node;
  Formula() = default;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Derived connectives, expanded into the core {neg, conj, exists} forms.
Formula f_or(Formula a, Formula b);       // ¬(¬a ∧ ¬b)
Formula f_implies(Formula a, Formula b);  // ¬(a ∧ ¬b)
Formula f_forall(std::string var, Formula body);  // ¬∃x ¬body

struct GenConfig {
  int depth = 1;        // 0: atoms only; 1: one connective layer; 2: two
  int quantifiers = 1;  // per-formula bound on existential quantifiers
  std::size_t cap = 200000;
};

// Deterministic family of closed formulas over the given constants, up to
// the configured nesting depth and quantifier count.
std::vector<Formula> generate_formulas(const std::vector<PName>& constants,
                                       const GenConfig& cfg);

}  // namespace urforce
