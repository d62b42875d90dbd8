#include <doctest.h>

#include <algorithm>
#include <set>

#include "urforce/value.hpp"

using namespace urforce;

namespace {

HfuValue ur(const std::string& id) { return HfuValue::urelement(id); }
HfuValue vset(std::vector<HfuValue> ms) { return HfuValue::set(std::move(ms)); }

// Independent kernel oracle: walk the tree and collect urelement ids.
void collect_urs(const HfuValue& v, std::set<std::string>& out) {
  if (v.is_urelement()) {
    out.insert(v.ur_id());
    return;
  }
  for (const auto& m : v.members()) collect_urs(m, out);
}

// Independent stage oracle: explicit powerset over a value list, plus the
// urelements again.
std::set<std::string> powerset_stage(const std::vector<HfuValue>& prev,
                                     const std::vector<std::string>& urs) {
  std::set<std::string> out;
  const std::size_t n = prev.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<HfuValue> ms;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) ms.push_back(prev[i]);
    out.insert(vset(ms).repr());
  }
  for (const auto& u : urs) out.insert(ur(u).repr());
  return out;
}

std::vector<HfuValue> sample_values() {
  HfuValue a = ur("a"), b = ur("b"), c = ur("c");
  HfuValue empty;
  return {a,
          b,
          c,
          empty,
          vset({a}),
          vset({b}),
          vset({a, b}),
          vset({empty}),
          vset({empty, a}),
          vset({vset({a}), b}),
          vset({vset({a, c}), vset({empty})}),
          vset({vset({vset({b})})})};
}

std::vector<Automorphism> pool_permutations() {
  std::vector<std::string> ids = {"a", "b", "c"};
  std::vector<Automorphism> out;
  std::vector<std::string> perm = ids;
  do {
    std::map<std::string, std::string> m;
    for (std::size_t i = 0; i < ids.size(); ++i) m[ids[i]] = perm[i];
    out.push_back(Automorphism::from_map(m));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_CASE("set construction is extensional and canonical") {
  CHECK(vset({}).is_empty_set());
  CHECK(vset({ur("a"), ur("a")}) == vset({ur("a")}));
  HfuValue v = vset({vset({ur("a")}), HfuValue()});
  REQUIRE(v.members().size() == 2);
  CHECK(v.members()[0] == HfuValue());  // empty set first in canonical order
  CHECK(v.members()[1] == vset({ur("a")}));
  CHECK(vset({ur("b"), ur("a")}) == vset({ur("a"), ur("b")}));
  CHECK(ur("a") != vset({}));
}

TEST_CASE("kernels match the walk oracle") {
  CHECK(ur("a").kernel() == std::vector<std::string>{"a"});
  CHECK(HfuValue().kernel().empty());
  CHECK(vset({ur("a"), vset({ur("b")})}).kernel() == std::vector<std::string>{"a", "b"});
  for (const auto& v : sample_values()) {
    std::set<std::string> expect;
    collect_urs(v, expect);
    CHECK(v.kernel() == std::vector<std::string>(expect.begin(), expect.end()));
  }
}

TEST_CASE("transitive closure and rank") {
  HfuValue v = vset({vset({ur("a")})});
  auto tc = transitive_closure(v);
  REQUIRE(tc.size() == 2);
  CHECK(std::count(tc.begin(), tc.end(), ur("a")) == 1);
  CHECK(std::count(tc.begin(), tc.end(), vset({ur("a")})) == 1);

  CHECK(ur("a").rank() == 0);
  CHECK(HfuValue().rank() == 0);
  CHECK(vset({HfuValue(), vset({HfuValue()})}).rank() == 2);

  for (const auto& v2 : sample_values()) {
    auto closure = transitive_closure(v2);
    std::set<std::string> reprs;
    for (const auto& x : closure) reprs.insert(x.repr());
    for (const auto& x : closure)
      if (!x.is_urelement())
        for (const auto& m : x.members()) CHECK(reprs.count(m.repr()) == 1);
  }
}

TEST_CASE("hierarchy stages match the direct powerset computation") {
  const std::vector<std::string> urs = {"a"};
  auto v0 = build_v(0, urs);
  REQUIRE(v0.size() == 1);
  CHECK(v0[0] == ur("a"));
  CHECK(build_v(1, urs).size() == 3);  // {}, {a}, and the urelement itself
  CHECK(build_v(2, urs).size() == 9);  // eight subsets of the previous stage plus a

  std::vector<HfuValue> prev = v0;
  for (int alpha = 1; alpha <= 3; ++alpha) {
    auto expect = powerset_stage(prev, urs);
    auto got = build_v(alpha, urs);
    std::set<std::string> got_reprs;
    for (const auto& v : got) got_reprs.insert(v.repr());
    CHECK(got_reprs == expect);
    prev = got;
  }
}

TEST_CASE("hierarchy invariants over two urelements") {
  const std::vector<std::string> ab = {"a", "b"};
  auto s1 = build_v(1, ab);
  auto s2 = build_v(2, ab);
  std::set<std::string> s2_reprs;
  for (const auto& v : s2) s2_reprs.insert(v.repr());
  for (const auto& v : s1) CHECK(s2_reprs.count(v.repr()) == 1);  // stages grow
  for (const auto& v : s2)
    for (const auto& k : v.kernel())
      CHECK(std::find(ab.begin(), ab.end(), k) != ab.end());  // kernels stay inside

  // Everything with a fitting kernel shows up by its rank (low ranks only:
  // the next stage is a tower of 2^66).
  for (const auto& v : sample_values()) {
    const auto& k = v.kernel();
    if (v.rank() > 1) continue;
    if (!std::includes(ab.begin(), ab.end(), k.begin(), k.end())) continue;
    auto stage = build_v(v.rank() + 1, ab);
    CHECK(std::count(stage.begin(), stage.end(), v) == 1);
  }
}

TEST_CASE("hierarchy budget") { CHECK_THROWS_AS(build_v(6, {"a", "b"}, 1000), Error); }

TEST_CASE("automorphism action") {
  Automorphism swap_ab = Automorphism::swap_pair("a", "b");
  CHECK(swap_ab.apply(vset({ur("a"), vset({ur("b")})})) ==
        vset({ur("b"), vset({ur("a")})}));
  CHECK(Automorphism::identity().apply(vset({ur("a")})) == vset({ur("a")}));
  CHECK(swap_ab.apply(HfuValue()) == HfuValue());
  CHECK_THROWS_AS(Automorphism::from_map({{"a", "b"}}), Error);  // not onto its support

  for (const auto& pi : pool_permutations()) {
    for (const auto& x : sample_values()) {
      for (const auto& y : sample_values())
        CHECK(value_in(y, x) == value_in(pi.apply(y), pi.apply(x)));
      std::vector<std::string> mapped;
      for (const auto& u : x.kernel()) mapped.push_back(pi.apply(u));
      std::sort(mapped.begin(), mapped.end());
      CHECK(pi.apply(x).kernel() == mapped);
      bool fixes_kernel = true;
      for (const auto& u : x.kernel())
        if (pi.apply(u) != u) fixes_kernel = false;
      if (fixes_kernel) CHECK(pi.apply(x) == x);
    }
    CHECK(pi.then(pi.inverse()).is_identity());
  }
}

TEST_CASE("atomic relations") {
  CHECK(value_subset(ur("a"), HfuValue()));  // urelements have no members
  CHECK(!value_aeq(ur("a"), HfuValue()));
  CHECK(value_aeq(HfuValue(), vset({ur("a")})));
  CHECK(value_aeq(ur("a"), ur("a")));
  CHECK(!value_aeq(ur("a"), ur("b")));
  CHECK(value_in(ur("a"), vset({ur("a")})));
  CHECK(!value_in(ur("a"), ur("a")));
  CHECK(nat_value(2) == vset({HfuValue(), vset({HfuValue()})}));
}
