#include "urforce/axioms.hpp"

#include <algorithm>
#include <set>

namespace urforce {

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string render_set(const std::vector<std::string>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += s[i];
  }
  return out + "}";
}

bool subset_of(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::string> set_union(const std::vector<std::string>& a,
                                   const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

void Ideal::normalize() {
  pool = sorted_unique(pool);
  for (auto& s : family) s = sorted_unique(s);
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

IdealCheck is_a_ideal(const Ideal& raw) {
  Ideal ideal = raw;
  ideal.normalize();
  for (const auto& s : ideal.family)
    for (const auto& u : s)
      if (!std::binary_search(ideal.pool.begin(), ideal.pool.end(), u))
        return {false, 0, "member outside the pool: " + u};
  std::set<std::vector<std::string>> fam(ideal.family.begin(), ideal.family.end());
  if (fam.count(ideal.pool))
    return {false, 1, "family contains the full pool " + render_set(ideal.pool)};
  for (const auto& a : ideal.family)
    for (const auto& b : ideal.family) {
      auto u = set_union(a, b);
      if (!fam.count(u))
        return {false, 2,
                render_set(a) + " union " + render_set(b) + " = " + render_set(u) +
                    " missing"};
    }
  for (const auto& a : ideal.family) {
    const std::size_t n = a.size();
    if (n >= 8 * sizeof(std::size_t) - 1) fail_budget("ideal member too large");
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<std::string> b;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) b.push_back(a[i]);
      if (!fam.count(b))
        return {false, 3, render_set(b) + " subset of " + render_set(a) + " missing"};
    }
  }
  for (const auto& u : ideal.pool)
    if (!fam.count({u})) return {false, 4, "singleton {" + u + "} missing"};
  return {};
}

Automorphism ideal_swap(const std::string& a, const std::vector<std::string>& A_raw,
                        const Ideal& raw) {
  Ideal ideal = raw;
  ideal.normalize();
  auto A = sorted_unique(A_raw);
  if (!std::binary_search(A.begin(), A.end(), a))
    fail_invalid("swap point " + a + " is not in the given set");
  if (!std::binary_search(ideal.family.begin(), ideal.family.end(), A))
    fail_invalid("set " + render_set(A) + " is not in the family");
  std::string outside;
  for (const auto& u : ideal.pool)
    if (!std::binary_search(A.begin(), A.end(), u)) {
      outside = u;
      break;
    }
  if (outside.empty()) fail_invalid("no urelement outside " + render_set(A));
  Automorphism pi = Automorphism::swap_pair(a, outside);

  // The transposition maps the family onto itself for any valid ideal; verify
  // anyway and refuse on families that merely look like ideals.
  std::set<std::vector<std::string>> fam(ideal.family.begin(), ideal.family.end());
  for (const auto& s : ideal.family) {
    std::vector<std::string> image;
    for (const auto& u : s) image.push_back(pi.apply(u));
    if (!fam.count(sorted_unique(image)))
      fail_invalid("transposition does not preserve the family at " + render_set(s));
  }
  for (const auto& u : A)
    if (u != a && pi.apply(u) != u) fail_invalid("transposition moves a fixed point");
  if (pi.apply(a) == a) fail_invalid("transposition fixes the swap point");
  return pi;
}

std::optional<Automorphism> homogeneity_automorphism(const std::vector<std::string>& pool_raw,
                                                     const std::vector<std::string>& fixed_raw,
                                                     const std::vector<std::string>& B_raw,
                                                     const std::vector<std::string>& C_raw) {
  auto pool = sorted_unique(pool_raw);
  auto fixed = sorted_unique(fixed_raw);
  auto B = sorted_unique(B_raw);
  auto C = sorted_unique(C_raw);
  for (const auto& sets : {&fixed, &B, &C})
    for (const auto& u : *sets)
      if (!std::binary_search(pool.begin(), pool.end(), u))
        fail_invalid("urelement outside the pool: " + u);
  for (const auto& u : B)
    if (std::binary_search(fixed.begin(), fixed.end(), u))
      fail_invalid("source set overlaps the fixed set at " + u);
  for (const auto& u : C)
    if (std::binary_search(fixed.begin(), fixed.end(), u))
      fail_invalid("target set overlaps the fixed set at " + u);
  if (B.size() != C.size()) return std::nullopt;

  std::map<std::string, std::string> mapping;
  for (std::size_t i = 0; i < B.size(); ++i) mapping[B[i]] = C[i];
  // Close into a permutation: whatever of C is not hit back maps onto the
  // part of B left uncovered.
  std::vector<std::string> c_minus_b, b_minus_c;
  std::set_difference(C.begin(), C.end(), B.begin(), B.end(), std::back_inserter(c_minus_b));
  std::set_difference(B.begin(), B.end(), C.begin(), C.end(), std::back_inserter(b_minus_c));
  for (std::size_t i = 0; i < c_minus_b.size(); ++i) mapping[c_minus_b[i]] = b_minus_c[i];
  return Automorphism::from_map(std::move(mapping));
}

std::optional<std::vector<std::string>> duplicate_of(const std::vector<std::string>& pool_raw,
                                                     const std::vector<std::string>& A_raw) {
  auto pool = sorted_unique(pool_raw);
  auto A = sorted_unique(A_raw);
  std::vector<std::string> rest;
  std::set_difference(pool.begin(), pool.end(), A.begin(), A.end(), std::back_inserter(rest));
  if (rest.size() < A.size()) return std::nullopt;
  rest.resize(A.size());
  return rest;
}

std::vector<std::string> tail_of(const std::vector<std::string>& pool_raw,
                                 const std::vector<std::string>& A_raw) {
  auto pool = sorted_unique(pool_raw);
  auto A = sorted_unique(A_raw);
  std::vector<std::string> rest;
  std::set_difference(pool.begin(), pool.end(), A.begin(), A.end(), std::back_inserter(rest));
  return rest;
}

bool Ultrafilter::contains(const std::vector<std::string>& subset) const {
  return std::find(subset.begin(), subset.end(), generator) != subset.end();
}

namespace {

bool eval_ground_atom(AtomKind k, const HfuValue& a, const HfuValue& b) {
  switch (k) {
    case AtomKind::member: return value_in(a, b);
    case AtomKind::equal: return a == b;
    case AtomKind::subset: return value_subset(a, b);
    case AtomKind::aeq: return value_aeq(a, b);
  }
  return false;
}

struct UltrapowerContext {
  const std::vector<std::pair<std::string, std::map<std::string, HfuValue>>>& functions;
  const Ultrafilter& filter;
  std::map<std::string, std::size_t> class_of;  // function name -> partition block

  const std::map<std::string, HfuValue>& fn(const Term& t) const {
    if (t.kind() != Term::Kind::variable)
      fail_invalid("ultrapower terms must be function references");
    for (const auto& [name, table] : functions)
      if (name == t.var_name()) return table;
    fail_invalid("unknown function: " + t.var_name());
  }

  const HfuValue& at(const std::map<std::string, HfuValue>& table,
                     const std::string& y) const {
    auto it = table.find(y);
    if (it == table.end()) fail_invalid("function not total at index " + y);
    return it->second;
  }

  // Truth set of an atom, tested against the filter.
  bool ae_atom(AtomKind k, const Term& lhs, const Term& rhs) const {
    const auto& f = fn(lhs);
    const auto& g = fn(rhs);
    std::vector<std::string> truth;
    for (const auto& y : filter.index)
      if (eval_ground_atom(k, at(f, y), at(g, y))) truth.push_back(y);
    return filter.contains(truth);
  }

  bool ae_is_ur(const Term& t) const {
    const auto& f = fn(t);
    std::vector<std::string> truth;
    for (const auto& y : filter.index)
      if (at(f, y).is_urelement()) truth.push_back(y);
    return filter.contains(truth);
  }

  bool quotient_eval(const Formula& f) const {
    switch (f.kind()) {
      case Formula::Kind::atom:
        if (f.atom_kind() == AtomKind::equal)
          return class_of.at(f.lhs().var_name()) == class_of.at(f.rhs().var_name());
        return ae_atom(f.atom_kind(), f.lhs(), f.rhs());
      case Formula::Kind::is_ur:
        return ae_is_ur(f.arg());
      case Formula::Kind::neg:
        return !quotient_eval(f.child());
      case Formula::Kind::conj:
        return quotient_eval(f.left()) && quotient_eval(f.right());
      case Formula::Kind::exists:
        fail_invalid("ultrapower formulas are quantifier-free");
    }
    fail_invalid("unreachable formula kind");
  }

  bool pointwise_eval(const Formula& f, const std::string& y) const {
    switch (f.kind()) {
      case Formula::Kind::atom:
        return eval_ground_atom(f.atom_kind(), at(fn(f.lhs()), y), at(fn(f.rhs()), y));
      case Formula::Kind::is_ur:
        return at(fn(f.arg()), y).is_urelement();
      case Formula::Kind::neg:
        return !pointwise_eval(f.child(), y);
      case Formula::Kind::conj:
        return pointwise_eval(f.left(), y) && pointwise_eval(f.right(), y);
      case Formula::Kind::exists:
        fail_invalid("ultrapower formulas are quantifier-free");
    }
    fail_invalid("unreachable formula kind");
  }
};

}  // namespace

LosResult internal_ultrapower(
    const std::vector<std::pair<std::string, std::map<std::string, HfuValue>>>& functions,
    const Ultrafilter& f, const Formula& phi) {
  if (f.index.empty()) fail_invalid("empty index set");
  if (std::find(f.index.begin(), f.index.end(), f.generator) == f.index.end())
    fail_invalid("generator outside the index set");
  UltrapowerContext ctx{functions, f, {}};

  // Partition the functions by almost-everywhere equality; equality atoms on
  // the quotient side compare partition blocks rather than truth sets.
  std::vector<std::vector<std::string>> blocks;
  for (const auto& [name, table] : functions) {
    bool placed = false;
    for (auto& block : blocks) {
      const auto& rep = *std::find_if(functions.begin(), functions.end(),
                                      [&](const auto& e) { return e.first == block[0]; });
      std::vector<std::string> agree;
      for (const auto& y : f.index)
        if (ctx.at(table, y) == ctx.at(rep.second, y)) agree.push_back(y);
      if (f.contains(agree)) {
        block.push_back(name);
        placed = true;
        break;
      }
    }
    if (!placed) blocks.push_back({name});
  }
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (const auto& name : blocks[b]) ctx.class_of[name] = b;

  LosResult result;
  result.quotient_side = ctx.quotient_eval(phi);
  std::vector<std::string> truth;
  for (const auto& y : f.index)
    if (ctx.pointwise_eval(phi, y)) truth.push_back(y);
  result.pointwise_side = f.contains(truth);
  return result;
}

}  // namespace urforce
