#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "urforce/errors.hpp"

namespace urforce {

struct PosetCheck {
  bool ok = true;
  std::string law;                     // empty when ok
  std::vector<std::string> witnesses;  // offending ids
};

// A finite partial order of forcing conditions with a designated greatest
// element. The input relation may omit reflexive and transitive pairs; it is
// closed automatically before the laws are checked. Element ids are stored
// sorted, so all derived output is deterministic.
class Poset {
 public:
  static PosetCheck validate(const std::vector<std::string>& elements,
                             const std::vector<std::pair<std::string, std::string>>& leq_pairs,
                             const std::string& top);
  // Throws Errc::invalid carrying the first violated law.
  static Poset make(std::vector<std::string> elements,
                    const std::vector<std::pair<std::string, std::string>>& leq_pairs,
                    const std::string& top);

  const std::vector<std::string>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  const std::string& top() const { return elems_[top_]; }
  int top_index() const { return top_; }

  bool has_element(const std::string& id) const { return index_.count(id) != 0; }
  int index_of(const std::string& id) const;  // throws Errc::invalid on unknown id
  const std::string& id_of(int i) const { return elems_[i]; }

  bool leq(const std::string& a, const std::string& b) const;
  bool leq_i(int a, int b) const { return leq_[a][b]; }
  bool compatible(const std::string& a, const std::string& b) const;
  bool compatible_i(int a, int b) const;

  std::vector<std::string> atoms() const;  // minimal elements
  const std::vector<int>& atom_indices() const { return atoms_; }
  std::vector<int> below(int p) const;  // all q <= p, ascending index order

  bool is_dense(const std::vector<std::string>& d) const;
  bool is_dense_below(const std::vector<std::string>& d, const std::string& p) const;
  bool is_dense_below_i(const std::vector<bool>& in_d, int p) const;

  bool is_antichain(const std::vector<std::string>& xs) const;
  bool is_maximal_antichain(const std::vector<std::string>& xs) const;
  std::vector<std::vector<std::string>> maximal_antichains(
      std::size_t budget = kDefaultBudget) const;

 private:
  std::vector<std::string> elems_;  // sorted unique
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<bool>> leq_;
  std::vector<int> atoms_;
  int top_ = -1;
};

// A set of conditions, kept sorted and unique.
struct Filter {
  std::vector<std::string> members;

  Filter() = default;
  explicit Filter(std::vector<std::string> ms);
  bool contains(const std::string& id) const;
  bool operator==(const Filter& o) const { return members == o.members; }
};

// Upward closed, downward directed, contains the top element.
bool is_filter(const Poset& p, const Filter& f);

// Enumerates every dense subset; only usable on small posets.
bool meets_all_dense(const Poset& p, const Filter& f, std::size_t budget = kDefaultBudget);

// The generic filters of a finite poset: exactly the upward closures of its
// atoms. Each meets every dense subset.
std::vector<Filter> generic_filters(const Poset& p);

// All partial functions from `domain` to {0,1} ordered by reverse inclusion;
// the empty function is the top. Condition ids look like "{}", "{x:0,y:1}".
Poset fn_poset(const std::vector<std::string>& domain, std::size_t budget = kDefaultBudget);

}  // namespace urforce
