#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "urforce/formula.hpp"
#include "urforce/value.hpp"

namespace urforce {

// A family of urelement subsets over a finite pool. A valid ideal excludes
// the full pool, is closed under union and subset, and contains every
// singleton.
struct Ideal {
  std::vector<std::string> pool;                  // sorted unique
  std::vector<std::vector<std::string>> family;   // each sorted unique

  void normalize();
};

struct IdealCheck {
  bool ok = true;
  int condition = 0;   // 1: full pool present, 2: union, 3: subset, 4: singleton
  std::string detail;  // witness rendering
};

IdealCheck is_a_ideal(const Ideal& ideal);

// Transposes `a` with some urelement outside `A`; the result maps the family
// onto itself, moves `a`, and fixes A-{a} pointwise. Throws when a ∉ A, when
// A is not in the family, or when no urelement outside A exists.
Automorphism ideal_swap(const std::string& a, const std::vector<std::string>& A,
                        const Ideal& ideal);

// When |B| = |C|, a pool permutation carrying B onto C and fixing `fixed`
// pointwise (B and C must avoid `fixed`); no permutation when sizes differ.
std::optional<Automorphism> homogeneity_automorphism(const std::vector<std::string>& pool,
                                                     const std::vector<std::string>& fixed,
                                                     const std::vector<std::string>& B,
                                                     const std::vector<std::string>& C);

// A disjoint equinumerous copy inside the pool, when the complement is large
// enough.
std::optional<std::vector<std::string>> duplicate_of(const std::vector<std::string>& pool,
                                                     const std::vector<std::string>& A);

// At finite scale the unique tail is the complement: it is disjoint from A
// and every disjoint set injects into it.
std::vector<std::string> tail_of(const std::vector<std::string>& pool,
                                 const std::vector<std::string>& A);

// Every ultrafilter on a finite index set is principal; the type stores the
// generator.
struct Ultrafilter {
  std::vector<std::string> index;
  std::string generator;

  bool contains(const std::vector<std::string>& subset) const;
};

struct LosResult {
  bool quotient_side = false;   // truth in the quotient structure
  bool pointwise_side = false;  // the pointwise truth set belongs to the filter
};

// Quantifier-free formulas only; formula variables refer to function names.
// The quotient side interprets atoms filter-almost-everywhere (equality via
// the function partition) and then applies the connectives; the pointwise
// side evaluates the whole formula at each index point and tests the truth
// set against the filter.
LosResult internal_ultrapower(
    const std::vector<std::pair<std::string, std::map<std::string, HfuValue>>>& functions,
    const Ultrafilter& f, const Formula& phi);

}  // namespace urforce
