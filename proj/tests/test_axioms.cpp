#include <doctest.h>

#include <algorithm>
#include <set>

#include "urforce/axioms.hpp"
#include "urforce/diagram.hpp"

using namespace urforce;

namespace {

Ideal make_ideal(std::vector<std::string> pool,
                 std::vector<std::vector<std::string>> family) {
  Ideal i;
  i.pool = std::move(pool);
  i.family = std::move(family);
  i.normalize();
  return i;
}

// Third route through the four conditions, on explicit set-of-sets values.
bool ideal_oracle_sets(const Ideal& ideal) {
  std::set<std::set<std::string>> fam;
  for (const auto& s : ideal.family) fam.insert(std::set<std::string>(s.begin(), s.end()));
  std::set<std::string> pool(ideal.pool.begin(), ideal.pool.end());
  for (const auto& s : fam)
    for (const auto& u : s)
      if (!pool.count(u)) return false;
  if (fam.count(pool)) return false;
  for (const auto& s : fam)
    for (const auto& t : fam) {
      std::set<std::string> u = s;
      u.insert(t.begin(), t.end());
      if (!fam.count(u)) return false;
    }
  for (const auto& s : fam) {
    std::vector<std::string> items(s.begin(), s.end());
    for (std::size_t mask = 0; mask < (std::size_t{1} << items.size()); ++mask) {
      std::set<std::string> sub;
      for (std::size_t i = 0; i < items.size(); ++i)
        if (mask & (std::size_t{1} << i)) sub.insert(items[i]);
      if (!fam.count(sub)) return false;
    }
  }
  for (const auto& u : pool)
    if (!fam.count({u})) return false;
  return true;
}

}  // namespace

TEST_CASE("the four ideal conditions, with witnesses") {
  // Singletons alone: union closure fails at {a} with {b}.
  Ideal small = make_ideal({"a", "b", "c"}, {{}, {"a"}, {"b"}, {"c"}});
  auto r1 = is_a_ideal(small);
  CHECK(!r1.ok);
  CHECK(r1.condition == 2);

  // All subsets of {a,b} over the pool {a,b}: the full pool is excluded, so
  // the family without it loses union closure.
  Ideal proper = make_ideal({"a", "b"}, {{}, {"a"}, {"b"}});
  auto r2 = is_a_ideal(proper);
  CHECK(!r2.ok);
  CHECK(r2.condition == 2);

  // Missing singleton.
  Ideal nosingleton = make_ideal({"a", "b", "c"}, {{}, {"a"}, {"b"}, {"a", "b"}});
  auto r3 = is_a_ideal(nosingleton);
  CHECK(!r3.ok);
  CHECK(r3.condition == 4);

  // Dropping the full pool from the powerset breaks union closure again:
  // {a,b} with {a,c} unions to the whole pool.
  std::vector<std::vector<std::string>> fam;
  for (const auto& s : std::vector<std::vector<std::string>>{
           {}, {"a"}, {"b"}, {"c"}, {"a", "b"}, {"a", "c"}, {"b", "c"}})
    fam.push_back(s);
  auto r5 = is_a_ideal(make_ideal({"a", "b", "c"}, fam));
  CHECK(!r5.ok);
  CHECK(r5.condition == 2);

  // Full pool present.
  Ideal with_full = make_ideal({"a"}, {{}, {"a"}});
  auto r4 = is_a_ideal(with_full);
  CHECK(!r4.ok);
  CHECK(r4.condition == 1);

  // Over a nonempty finite pool the singletons union up to the full pool, so
  // nothing passes all four conditions; only the empty pool carries an ideal.
  CHECK(is_a_ideal(make_ideal({}, {})).ok);
}

TEST_CASE("ideal check agrees with an independent set-based oracle (pools up to 2)") {
  for (std::size_t pool_size = 0; pool_size <= 2; ++pool_size) {
    std::vector<std::string> pool = {"a", "b"};
    pool.resize(pool_size);
    std::vector<std::vector<std::string>> subsets;
    for (std::size_t mask = 0; mask < (std::size_t{1} << pool_size); ++mask) {
      std::vector<std::string> s;
      for (std::size_t i = 0; i < pool_size; ++i)
        if (mask & (std::size_t{1} << i)) s.push_back(pool[i]);
      subsets.push_back(std::move(s));
    }
    for (std::size_t fmask = 0; fmask < (std::size_t{1} << subsets.size()); ++fmask) {
      std::vector<std::vector<std::string>> family;
      for (std::size_t i = 0; i < subsets.size(); ++i)
        if (fmask & (std::size_t{1} << i)) family.push_back(subsets[i]);
      Ideal ideal = make_ideal(pool, family);
      CHECK(is_a_ideal(ideal).ok == ideal_oracle_sets(ideal));
    }
  }
}

TEST_CASE("ideal swaps satisfy all three clauses") {
  Ideal ideal = make_ideal(
      {"a", "b", "c"},
      {{}, {"a"}, {"b"}, {"c"}, {"a", "b"}, {"a", "c"}, {"b", "c"}});
  Automorphism pi = ideal_swap("a", {"a", "b"}, ideal);
  CHECK(pi.apply("a") != "a");
  CHECK(pi.apply("b") == "b");  // fixes A - {a} pointwise
  std::set<std::vector<std::string>> fam(ideal.family.begin(), ideal.family.end());
  for (const auto& s : ideal.family) {
    std::vector<std::string> image;
    for (const auto& u : s) image.push_back(pi.apply(u));
    std::sort(image.begin(), image.end());
    CHECK(fam.count(image) == 1);
  }

  CHECK_THROWS_AS(ideal_swap("a", {"b"}, ideal), Error);  // a not in A
  Ideal tight = make_ideal({"a"}, {{}});
  CHECK_THROWS_AS(ideal_swap("a", {"a"}, tight), Error);  // A not in the family
}

TEST_CASE("homogeneity permutations") {
  const std::vector<std::string> pool = {"a", "b", "c"};
  auto pi = homogeneity_automorphism(pool, {"a"}, {"b"}, {"c"});
  REQUIRE(pi.has_value());
  CHECK(pi->apply("b") == "c");
  CHECK(pi->apply("c") == "b");
  CHECK(pi->apply("a") == "a");

  auto same = homogeneity_automorphism(pool, {"a"}, {"b"}, {"b"});
  REQUIRE(same.has_value());
  CHECK(same->is_identity());

  CHECK(!homogeneity_automorphism(pool, {}, {"a", "b"}, {"c"}).has_value());
  CHECK_THROWS_AS(homogeneity_automorphism(pool, {"a"}, {"a"}, {"c"}), Error);

  // Overlapping source and target still closes into a permutation.
  const std::vector<std::string> pool4 = {"a", "b", "c", "d"};
  auto lap = homogeneity_automorphism(pool4, {}, {"a", "b"}, {"b", "c"});
  REQUIRE(lap.has_value());
  std::set<std::string> image;
  for (const auto& u : {"a", "b"}) image.insert(lap->apply(u));
  CHECK(image == std::set<std::string>{"b", "c"});

  // A disjoint transposition squares to the identity and keeps the pair.
  auto swp = homogeneity_automorphism(pool, {"a"}, {"b"}, {"c"});
  CHECK(swp->then(*swp).is_identity());
  std::set<std::string> both;
  for (const auto& u : {"b", "c"}) both.insert(swp->apply(u));
  CHECK(both == std::set<std::string>{"b", "c"});
}

TEST_CASE("duplicates and tails at finite scale") {
  const std::vector<std::string> pool = {"a", "b", "c", "d"};
  auto dup = duplicate_of(pool, {"a", "b"});
  REQUIRE(dup.has_value());
  CHECK(*dup == std::vector<std::string>{"c", "d"});
  CHECK(tail_of(pool, {"a", "b"}) == std::vector<std::string>{"c", "d"});

  CHECK(!duplicate_of(pool, pool).has_value());
  CHECK(tail_of(pool, pool).empty());
  CHECK(duplicate_of(pool, {}) == std::vector<std::string>{});
  CHECK(tail_of(pool, {}) == pool);

  // The tail absorbs every disjoint subset injectively: at finite scale just
  // a size comparison, checked exhaustively.
  const auto tail = tail_of(pool, {"a", "d"});
  for (std::size_t mask = 0; mask < (1u << pool.size()); ++mask) {
    std::vector<std::string> c;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask & (1u << i)) c.push_back(pool[i]);
    bool disjoint = true;
    for (const auto& u : c)
      if (u == "a" || u == "d") disjoint = false;
    if (disjoint) CHECK(c.size() <= tail.size());
  }
}

TEST_CASE("principal ultrapowers collapse to the generator") {
  const std::vector<std::string> index = {"i", "j"};
  std::map<std::string, HfuValue> f = {{"i", HfuValue::urelement("a")},
                                       {"j", HfuValue()}};
  std::map<std::string, HfuValue> g = {{"i", HfuValue::set({HfuValue::urelement("a")})},
                                       {"j", HfuValue()}};
  std::map<std::string, HfuValue> c = {{"i", HfuValue::urelement("a")},
                                       {"j", HfuValue::urelement("a")}};
  std::vector<std::pair<std::string, std::map<std::string, HfuValue>>> fs = {
      {"f", f}, {"g", g}, {"c", c}};

  Ultrafilter at_i{index, "i"};
  auto member = Formula::atom(AtomKind::member, Term::var("f"), Term::var("g"));
  LosResult r1 = internal_ultrapower(fs, at_i, member);
  CHECK(r1.quotient_side);          // a is in {a} at the generator
  CHECK(r1.pointwise_side);
  Ultrafilter at_j{index, "j"};
  LosResult r2 = internal_ultrapower(fs, at_j, member);
  CHECK(!r2.quotient_side);  // {} is not in {} at the generator
  CHECK(!r2.pointwise_side);

  // The urelement predicate collapses to the generator's value.
  LosResult r3 = internal_ultrapower(fs, at_i, Formula::is_ur(Term::var("f")));
  CHECK(r3.quotient_side);
  LosResult r4 = internal_ultrapower(fs, at_j, Formula::is_ur(Term::var("f")));
  CHECK(!r4.quotient_side);

  // Equal classes through the partition route: f and c agree at i only.
  auto eq = Formula::atom(AtomKind::equal, Term::var("f"), Term::var("c"));
  CHECK(internal_ultrapower(fs, at_i, eq).quotient_side);
  CHECK(!internal_ultrapower(fs, at_j, eq).quotient_side);

  // Connectives pass through the filter on both sides.
  auto compound = Formula::conj(Formula::neg(member), Formula::is_ur(Term::var("c")));
  for (const auto& uf : {at_i, at_j}) {
    LosResult r = internal_ultrapower(fs, uf, compound);
    CHECK(r.quotient_side == r.pointwise_side);
  }

  CHECK_THROWS_AS(internal_ultrapower(fs, Ultrafilter{index, "zz"}, member), Error);
  CHECK_THROWS_AS(
      internal_ultrapower(fs, at_i, Formula::exists("x", Formula::is_ur(Term::var("x")))),
      Error);
}

TEST_CASE("the implication diagram is fixed data") {
  const auto& edges = hierarchy_edges();
  CHECK(edges.size() == 14);
  auto has = [&edges](const std::string& from, const std::string& to) {
    return std::any_of(edges.begin(), edges.end(), [&](const DiagramEdge& e) {
      return e.from == from && e.to == to;
    });
  };
  CHECK(has("Tail", "Collection"));
  CHECK(has("Collection", "RP"));
  CHECK(has("RP", "RP-"));
  CHECK(has("RP-", "Collection"));  // closes the cycle with the previous two
  CHECK(has("A is a set", "Tail"));
  CHECK(has("Plenitude", "DC_<Ord-scheme"));
  CHECK(diagram_dot().find("\"Tail\" -> \"Collection\"") != std::string::npos);
}
