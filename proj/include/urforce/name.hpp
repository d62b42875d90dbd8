#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "urforce/poset.hpp"
#include "urforce/value.hpp"

namespace urforce {

// A name in the incompatibility calculus: a finite set of (entry, condition)
// pairs where an entry is a urelement or another name. Whenever two entries
// (a, p) and (y, q) have a urelement a distinct from y, p and q must be
// incompatible; that constraint is checked by is_valid_name, not by the
// constructor. Entries are stored deduplicated and sorted, so repr equality
// is structural equality.
class PName {
 public:
  struct Entry;

  PName();  // the empty name
  static PName make(std::vector<Entry> entries);
  static PName ur_entry(const std::string& ur, const std::string& cond);

  const std::vector<Entry>& entries() const;
  bool empty() const;
  const std::string& repr() const;
  int rank() const;  // 0 when no name entries, else 1 + max over name entries
  const std::vector<std::string>& kernel() const;  // urelements anywhere inside, sorted

  bool operator==(const PName& o) const { return repr() == o.repr(); }
  bool operator!=(const PName& o) const { return !(*this == o); }
  bool operator<(const PName& o) const { return repr() < o.repr(); }

  struct Node;  // implementation detail

 private:
  explicit PName(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct PName::Entry {
  bool is_ur = false;
  std::string ur;  // when is_ur
  PName sub;       // when !is_ur
  std::string cond;

  std::string entry_repr() const;
};

// A name in the older calculus: a urelement stands for itself, and a set
// name is a finite set of (name, condition) pairs with no side condition.
class LegacyName {
 public:
  struct Entry;

  LegacyName();  // the empty set name
  static LegacyName urelement(std::string id);
  static LegacyName set(std::vector<Entry> entries);

  bool is_urelement() const;
  const std::string& ur_id() const;
  const std::vector<Entry>& entries() const;
  const std::string& repr() const;
  int rank() const;
  std::vector<std::string> kernel() const;

  bool operator==(const LegacyName& o) const { return repr() == o.repr(); }
  bool operator<(const LegacyName& o) const { return repr() < o.repr(); }

  struct Node;  // implementation detail

 private:
  explicit LegacyName(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct LegacyName::Entry {
  LegacyName sub;
  std::string cond;
};

struct NameViolation {
  std::string path;    // repr of the subname holding the offending pair
  std::string first;   // repr of the urelement entry
  std::string second;  // repr of the clashing entry
};

struct ValidityReport {
  bool ok = true;
  std::optional<NameViolation> violation;
};

// Checks the incompatibility condition hereditarily, and that every
// condition id belongs to the poset.
ValidityReport is_valid_name(const Poset& p, const PName& n);

// The rigid name of a ground value: a urelement becomes its singleton entry
// at the top condition; a set maps member-wise.
PName check_name(const Poset& p, const HfuValue& v);
// Inverse of check_name, when the name has exactly that shape.
std::optional<HfuValue> decode_check_name(const Poset& p, const PName& n);

// Interpretation under a filter. If some urelement entry's condition lies in
// the filter the value is that urelement (unique for valid names; distinct
// urelements firing together is refused with Errc::invalid). Otherwise the
// value is the set of interpretations of the name entries whose condition
// lies in the filter.
HfuValue valuate(const Poset& p, const PName& n, const Filter& g);
HfuValue legacy_valuate(const Poset& p, const LegacyName& n, const Filter& g);

// Mixture over an antichain: the single name agreeing with f(p) below each
// p in the domain. Throws when the domain is not an antichain.
PName mix(const Poset& p, const std::vector<std::pair<std::string, PName>>& f);

// Hereditarily drops urelement entries outside `keep`.
PName purify(const Poset& p, const PName& n, const std::vector<std::string>& keep);

// The set-shaped companion of a name: it interprets extensionally like the
// original whenever the original interprets as a set.
PName set_counterpart(const Poset& p, const PName& n);

// Embedding of the older calculus: a urelement name becomes its singleton
// check entry, set names map entry-wise.
PName embed_j(const Poset& p, const LegacyName& n);
// Structural inverse on the embedding's range.
std::optional<LegacyName> j_preimage(const Poset& p, const PName& n);

// Urelement permutation acting on a name; conditions are left untouched.
PName act(const Automorphism& pi, const PName& n);

// Conditions encoded as pure sets (by index in the sorted element list), and
// the canonical name whose interpretation is the generic filter itself.
HfuValue condition_value(const Poset& p, const std::string& id);
PName gamma_name(const Poset& p);

// Proper subnames, hereditarily (not including the name itself).
std::vector<PName> subnames(const PName& n);

// A finite stand-in for the ground model's name class: a poset together with
// a subname-closed set of valid names over it.
class NamePool {
 public:
  NamePool(Poset p, std::vector<PName> names);  // validates closure and validity

  const Poset& poset() const { return poset_; }
  const std::vector<PName>& names() const { return names_; }
  bool contains(const PName& n) const { return reprs_.count(n.repr()) != 0; }
  std::size_t size() const { return names_.size(); }

 private:
  Poset poset_;
  std::vector<PName> names_;
  std::set<std::string> reprs_;
};

// Smallest subname-closed pool containing the seeds, plus the check names of
// every urelement mentioned anywhere in them.
NamePool close_pool(const Poset& p, const std::vector<PName>& seeds,
                    std::size_t budget = kDefaultBudget);

// Closure of legacy seeds under subnames.
std::vector<LegacyName> legacy_subclosure(const std::vector<LegacyName>& seeds);

}  // namespace urforce
