#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "urforce/errors.hpp"

namespace urforce {

// A hereditarily finite value over a pool of urelements: either a urelement
// (an opaque id with no members) or a finite set of values. Set members are
// kept deduplicated and sorted by their canonical serialization, so equality
// of serializations is extensional equality. Values are immutable and share
// structure freely.
class HfuValue {
 public:
  HfuValue();  // the empty set

  static HfuValue urelement(std::string id);
  static HfuValue set(std::vector<HfuValue> members);

  bool is_urelement() const;
  const std::string& ur_id() const;                // requires is_urelement()
  const std::vector<HfuValue>& members() const;    // requires !is_urelement()
  bool is_empty_set() const;

  // Canonical compact-JSON serialization; doubles as the total order key.
  const std::string& repr() const;

  // Urelements in the transitive closure of {value}, sorted. For a urelement
  // this is its own singleton.
  const std::vector<std::string>& kernel() const;

  int rank() const;  // urelements and the empty set have rank 0

  bool has_member(const HfuValue& m) const;

  bool operator==(const HfuValue& o) const { return repr() == o.repr(); }
  bool operator!=(const HfuValue& o) const { return !(*this == o); }
  bool operator<(const HfuValue& o) const { return repr() < o.repr(); }

  struct Node;  // implementation detail, public for the builder helpers

 private:
  explicit HfuValue(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Least transitive superset of the value's members (not including the value
// itself). Urelements yield the empty collection.
std::vector<HfuValue> transitive_closure(const HfuValue& v);

// von Neumann numeral: 0 = {}, k+1 = k ∪ {k}. Used to encode poset
// conditions as pure sets.
HfuValue nat_value(int k);

// v_alpha over a finite urelement set: stage 0 is the urelements themselves,
// each successor stage is the powerset of the previous stage plus the
// urelements again. Throws Errc::budget when the tower would exceed `budget`
// values.
std::vector<HfuValue> build_v(int alpha, const std::vector<std::string>& urs,
                              std::size_t budget = kDefaultBudget);

// Atomic relations shared by the satisfaction evaluator and the ultrapower.
bool value_in(const HfuValue& v, const HfuValue& w);      // v ∈ w
bool value_subset(const HfuValue& v, const HfuValue& w);  // every member of v is in w
bool value_aeq(const HfuValue& v, const HfuValue& w);     // same urelement, or both sets

// A permutation of urelement ids, identity outside its support. Acts on
// values by member-wise recursion; pure sets are fixed.
class Automorphism {
 public:
  Automorphism() = default;  // identity

  static Automorphism identity() { return {}; }
  static Automorphism swap_pair(const std::string& a, const std::string& b);
  // Validates that the support maps bijectively onto its image.
  static Automorphism from_map(std::map<std::string, std::string> mapping);

  const std::string& apply(const std::string& id) const;
  HfuValue apply(const HfuValue& v) const;

  // x -> g(f(x)) where f is *this.
  Automorphism then(const Automorphism& g) const;
  Automorphism inverse() const;

  bool is_identity() const { return map_.empty(); }
  const std::map<std::string, std::string>& mapping() const { return map_; }

 private:
  std::map<std::string, std::string> map_;  // support only; identity points dropped
};

std::string json_quote(const std::string& s);  // JSON string literal incl. quotes

}  // namespace urforce
