#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "urforce/name.hpp"

using namespace urforce;

namespace {

Poset p2() { return Poset::make({"1", "p", "q"}, {{"p", "1"}, {"q", "1"}}, "1"); }
Poset chain3() { return Poset::make({"1", "p", "r"}, {{"p", "1"}, {"r", "p"}}, "1"); }

PName::Entry ur_at(const std::string& u, const std::string& c) {
  return PName::Entry{true, u, PName(), c};
}
PName::Entry name_at(const PName& n, const std::string& c) {
  return PName::Entry{false, "", n, c};
}

// Oracle for the mixture: the displayed union, written directly over the
// entry lists.
PName mix_oracle(const Poset& p, const std::vector<std::pair<std::string, PName>>& f) {
  std::vector<PName::Entry> es;
  for (const auto& [cond, name] : f)
    for (const auto& e : name.entries())
      for (const auto& r : p.elements())
        if (p.leq(r, cond) && p.leq(r, e.cond)) {
          PName::Entry out = e;
          out.cond = r;
          es.push_back(out);
        }
  return PName::make(std::move(es));
}

}  // namespace

TEST_CASE("validity is the hereditary incompatibility condition") {
  Poset p = p2();
  PName good = PName::make({ur_at("a", "p"), ur_at("b", "q")});
  CHECK(is_valid_name(p, good).ok);

  PName same_cond = PName::make({ur_at("a", "p"), ur_at("b", "p")});
  auto r1 = is_valid_name(p, same_cond);
  CHECK(!r1.ok);
  REQUIRE(r1.violation.has_value());
  CHECK(r1.violation->path == same_cond.repr());

  PName with_sub = PName::make(
      {ur_at("a", "1"), name_at(check_name(p, HfuValue::urelement("b")), "1")});
  CHECK(!is_valid_name(p, with_sub).ok);  // the top is compatible with itself

  // Same urelement twice is fine at any pair of conditions.
  CHECK(is_valid_name(p, PName::make({ur_at("a", "p"), ur_at("a", "1")})).ok);

  // Violations are caught below the top level too.
  PName nested = PName::make({name_at(same_cond, "p")});
  auto r2 = is_valid_name(p, nested);
  CHECK(!r2.ok);
  CHECK(r2.violation->path == same_cond.repr());

  CHECK(!is_valid_name(p, PName::make({ur_at("a", "zz")})).ok);
}

TEST_CASE("check names and their interpretation") {
  Poset p = p2();
  PName achk = check_name(p, HfuValue::urelement("a"));
  CHECK(achk == PName::ur_entry("a", "1"));
  CHECK(check_name(p, HfuValue()) == PName());
  PName singleton = check_name(p, HfuValue::set({HfuValue::urelement("a")}));
  CHECK(singleton == PName::make({name_at(achk, "1")}));

  CHECK(decode_check_name(p, achk) == HfuValue::urelement("a"));
  CHECK(decode_check_name(p, singleton) ==
        HfuValue::set({HfuValue::urelement("a")}));
  CHECK(!decode_check_name(p, PName::ur_entry("a", "p")).has_value());

  // Check names are rigid under every generic filter.
  std::vector<HfuValue> grounds = {
      HfuValue::urelement("a"), HfuValue(),
      HfuValue::set({HfuValue::urelement("b"), HfuValue()}),
      HfuValue::set({HfuValue::set({HfuValue::urelement("a")})})};
  for (const auto& v : grounds)
    for (const auto& g : generic_filters(p)) CHECK(valuate(p, check_name(p, v), g) == v);
}

TEST_CASE("interpretation of urelement entries") {
  Poset p = p2();
  PName x = PName::make({ur_at("a", "p"), ur_at("b", "q")});
  CHECK(valuate(p, x, Filter({"1", "p"})) == HfuValue::urelement("a"));
  CHECK(valuate(p, x, Filter({"1", "q"})) == HfuValue::urelement("b"));
  CHECK(valuate(p, x, Filter({"1"})) == HfuValue());  // no entry fires

  PName y = PName::make({name_at(check_name(p, HfuValue::urelement("a")), "p")});
  CHECK(valuate(p, y, Filter({"1", "q"})) == HfuValue());
  CHECK(valuate(p, y, Filter({"1", "p"})) ==
        HfuValue::set({HfuValue::urelement("a")}));

  // Interpreting a malformed name with two fired urelements is refused.
  PName bad = PName::make({ur_at("a", "1"), ur_at("b", "1")});
  CHECK_THROWS_AS(valuate(p, bad, Filter({"1"})), Error);
}

TEST_CASE("legacy interpretation keeps urelement members") {
  Poset p = p2();
  LegacyName a = LegacyName::urelement("a");
  LegacyName b = LegacyName::urelement("b");
  CHECK(legacy_valuate(p, a, Filter({"1", "q"})) == HfuValue::urelement("a"));
  LegacyName x = LegacyName::set({{a, "p"}, {b, "q"}});
  CHECK(legacy_valuate(p, x, Filter({"1", "p"})) ==
        HfuValue::set({HfuValue::urelement("a")}));  // member, not identity
  CHECK(legacy_valuate(p, LegacyName(), Filter({"1"})) == HfuValue());
}

TEST_CASE("mixtures follow the union formula") {
  Poset p = p2();
  PName achk = check_name(p, HfuValue::urelement("a"));
  PName bchk = check_name(p, HfuValue::urelement("b"));
  PName mixed = mix(p, {{"p", achk}, {"q", bchk}});
  CHECK(mixed == PName::make({ur_at("a", "p"), ur_at("b", "q")}));

  // Singleton antichain at the top flattens the name one level.
  Poset c3 = chain3();
  PName x = PName::make({name_at(check_name(c3, HfuValue::urelement("a")), "p")});
  CHECK(mix(c3, {{"1", x}}) == mix_oracle(c3, {{"1", x}}));
  CHECK(mix(p, {}) == PName());
  CHECK_THROWS_AS(mix(p, {{"p", achk}, {"1", bchk}}), Error);  // not an antichain

  // Random-ish sweep against the oracle.
  std::vector<PName> names = {achk, bchk, PName(),
                              PName::make({ur_at("a", "p"), ur_at("b", "q")}),
                              PName::make({name_at(achk, "q")})};
  for (const auto& n1 : names)
    for (const auto& n2 : names) {
      std::vector<std::pair<std::string, PName>> f = {{"p", n1}, {"q", n2}};
      CHECK(mix(p, f) == mix_oracle(p, f));
      CHECK(is_valid_name(p, mix(p, f)).ok);
    }
}

TEST_CASE("purification drops foreign urelement entries hereditarily") {
  Poset p = p2();
  PName inner = PName::make({ur_at("b", "q"), ur_at("a", "p")});
  PName x = PName::make({ur_at("a", "p"), name_at(inner, "q")});
  PName kept = purify(p, x, {"a"});
  CHECK(kept == PName::make({ur_at("a", "p"),
                             name_at(PName::make({ur_at("a", "p")}), "q")}));
  CHECK(purify(p, PName::make({ur_at("b", "p")}), {}) == PName());
  PName chk = check_name(p, HfuValue::set({HfuValue::urelement("a")}));
  CHECK(purify(p, chk, {"a", "b"}) == chk);  // nothing to drop

  // Kernel bound and validity.
  for (const auto& keep : std::vector<std::vector<std::string>>{{}, {"a"}, {"b"}, {"a", "b"}}) {
    PName pur = purify(p, x, keep);
    CHECK(is_valid_name(p, pur).ok);
    for (const auto& u : pur.kernel())
      CHECK(std::find(keep.begin(), keep.end(), u) != keep.end());
  }
}

TEST_CASE("set counterparts agree with their originals on set values") {
  Poset p = p2();
  CHECK(set_counterpart(p, PName()) == PName());
  // Top-level urelement entries contribute nothing by themselves.
  CHECK(set_counterpart(p, PName::make({ur_at("a", "p")})) == PName());

  std::vector<PName> names = {
      check_name(p, HfuValue::urelement("a")),
      check_name(p, HfuValue::set({HfuValue::urelement("a"), HfuValue()})),
      PName::make({ur_at("a", "p"), ur_at("b", "q")}),
      PName::make({name_at(PName::make({ur_at("a", "p"), ur_at("b", "q")}), "1")}),
      PName::make({name_at(check_name(p, HfuValue::urelement("a")), "p")}),
  };
  for (const auto& n : names) {
    PName sc = set_counterpart(p, n);
    CHECK(is_valid_name(p, sc).ok);
    for (const auto& g : generic_filters(p)) {
      HfuValue v = valuate(p, n, g);
      HfuValue w = valuate(p, sc, g);
      CHECK(value_subset(w, v));
      CHECK(value_subset(v, w));
      if (!v.is_urelement()) CHECK(v == w);
    }
  }
}

TEST_CASE("embedding the older calculus") {
  Poset p = p2();
  LegacyName a = LegacyName::urelement("a");
  CHECK(embed_j(p, a) == check_name(p, HfuValue::urelement("a")));
  CHECK(embed_j(p, LegacyName()) == PName());
  LegacyName tau = LegacyName::set({{a, "p"}});
  CHECK(embed_j(p, tau) ==
        PName::make({name_at(PName::ur_entry("a", "1"), "p")}));

  // Structural inverse on the range.
  std::vector<LegacyName> pool = {a, LegacyName(), tau,
                                  LegacyName::set({{tau, "q"}, {a, "1"}})};
  for (const auto& t : pool) {
    auto back = j_preimage(p, embed_j(p, t));
    REQUIRE(back.has_value());
    CHECK(*back == t);
  }
  // A urelement entry off the top is not in the range.
  CHECK(!j_preimage(p, PName::ur_entry("a", "p")).has_value());
  // The embedding preserves interpretation outright.
  for (const auto& t : pool)
    for (const auto& g : generic_filters(p))
      CHECK(legacy_valuate(p, t, g) == valuate(p, embed_j(p, t), g));
}

TEST_CASE("permutations act entry-wise and commute with interpretation") {
  Poset p = p2();
  Automorphism swap_ab = Automorphism::swap_pair("a", "b");
  PName x = PName::make({ur_at("a", "p")});
  CHECK(act(swap_ab, x) == PName::make({ur_at("b", "p")}));
  CHECK(act(Automorphism::identity(), x) == x);

  std::vector<PName> names = {
      x, check_name(p, HfuValue::urelement("a")), PName(),
      PName::make({ur_at("a", "p"), ur_at("b", "q")}),
      PName::make({name_at(PName::make({ur_at("b", "q")}), "p")})};
  std::vector<Automorphism> perms = {Automorphism::identity(), swap_ab,
                                     Automorphism::swap_pair("a", "c")};
  for (const auto& pi : perms)
    for (const auto& n : names) {
      CHECK(is_valid_name(p, act(pi, n)).ok);
      for (const auto& g : generic_filters(p))
        CHECK(valuate(p, act(pi, n), g) == pi.apply(valuate(p, n, g)));
    }
}

TEST_CASE("the filter name interprets as the encoded filter") {
  Poset p = p2();
  PName gamma = gamma_name(p);
  CHECK(is_valid_name(p, gamma).ok);
  // Elements sort as 1 < p < q, so 1 encodes as 0 and p as 1.
  HfuValue expect = HfuValue::set({condition_value(p, "1"), condition_value(p, "p")});
  CHECK(valuate(p, gamma, Filter({"1", "p"})) == expect);
  CHECK(condition_value(p, "1") == HfuValue());
  CHECK(condition_value(p, "p") == HfuValue::set({HfuValue()}));
}

TEST_CASE("pool closure") {
  Poset p = p2();
  PName achk = check_name(p, HfuValue::urelement("a"));
  PName seed = PName::make({name_at(achk, "p")});
  NamePool pool = close_pool(p, {seed});
  CHECK(pool.contains(seed));
  CHECK(pool.contains(achk));  // subname and mentioned-urelement check name
  CHECK(pool.size() == 2);

  NamePool empty = close_pool(p, {});
  CHECK(empty.size() == 0);

  PName mixed = mix(p, {{"p", achk}, {"q", check_name(p, HfuValue::urelement("b"))}});
  NamePool frommix = close_pool(p, {mixed});
  CHECK(frommix.contains(mixed));
  CHECK(frommix.contains(achk));  // the mixed urelements get their check names

  CHECK_THROWS_AS(close_pool(p, {PName::make({ur_at("a", "1"), ur_at("b", "1")})}), Error);
  CHECK_THROWS_AS(NamePool(p, {seed}), Error);  // missing the subname
}

TEST_CASE("random valid names keep their laws") {
  Poset p = Poset::make({"1", "p", "q", "r"}, {{"p", "1"}, {"q", "1"}, {"r", "1"}}, "1");
  std::mt19937 rng(0xbeefu);
  const std::vector<std::string> urs = {"a", "b", "c"};
  const std::vector<std::string> conds = {"1", "p", "q", "r"};
  Automorphism swap_ab = Automorphism::swap_pair("a", "b");

  std::function<PName(int)> random_name = [&](int depth) {
    for (int attempt = 0; attempt < 40; ++attempt) {
      std::vector<PName::Entry> es;
      const int count = static_cast<int>(rng() % 4);
      for (int i = 0; i < count; ++i) {
        PName::Entry e;
        e.cond = conds[rng() % conds.size()];
        if (depth == 0 || rng() % 2) {
          e.is_ur = true;
          e.ur = urs[rng() % urs.size()];
        } else {
          e.sub = random_name(depth - 1);
        }
        es.push_back(std::move(e));
      }
      PName candidate = PName::make(std::move(es));
      if (is_valid_name(p, candidate).ok) return candidate;
    }
    return PName();
  };

  const auto generics = generic_filters(p);
  for (int i = 0; i < 200; ++i) {
    PName n = random_name(2);
    for (const auto& g : generics) {
      HfuValue v = valuate(p, n, g);
      const auto& kn = n.kernel();
      const auto& kv = v.kernel();
      CHECK(std::includes(kn.begin(), kn.end(), kv.begin(), kv.end()));
      CHECK(valuate(p, act(swap_ab, n), g) == swap_ab.apply(v));
      HfuValue w = valuate(p, set_counterpart(p, n), g);
      CHECK(value_subset(w, v));
      CHECK(value_subset(v, w));
    }
    PName pur = purify(p, n, {"a"});
    CHECK(is_valid_name(p, pur).ok);
    for (const auto& u : pur.kernel()) CHECK(u == "a");
  }
}

TEST_CASE("subnames are hereditary") {
  Poset p = p2();
  PName inner = PName::make({ur_at("b", "q")});
  PName mid = PName::make({name_at(inner, "p")});
  PName outer = PName::make({name_at(mid, "1")});
  auto subs = subnames(outer);
  CHECK(subs.size() == 2);
  CHECK(std::count(subs.begin(), subs.end(), inner) == 1);
  CHECK(std::count(subs.begin(), subs.end(), mid) == 1);
}
