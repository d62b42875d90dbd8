#include <doctest.h>

#include <algorithm>

#include "urforce/poset.hpp"

using namespace urforce;

namespace {

Poset p2() { return Poset::make({"1", "p", "q"}, {{"p", "1"}, {"q", "1"}}, "1"); }

}  // namespace

TEST_CASE("poset validation") {
  CHECK(Poset::validate({"1", "p"}, {{"p", "1"}}, "1").ok);
  auto bad = Poset::validate({"1", "p", "q"}, {{"p", "q"}, {"q", "p"}, {"p", "1"}, {"q", "1"}}, "1");
  CHECK(!bad.ok);
  CHECK(bad.law == "antisymmetry");
  CHECK(bad.witnesses == std::vector<std::string>{"p", "q"});
  auto no_top = Poset::validate({"p", "q"}, {}, "p");
  CHECK(!no_top.ok);
  CHECK(no_top.law == "top-not-maximum");
  CHECK(!Poset::validate({"p"}, {}, "1").ok);            // top id absent
  CHECK(!Poset::validate({"p"}, {{"p", "x"}}, "p").ok);  // unknown id in the relation
  CHECK(!Poset::validate({}, {}, "1").ok);
  CHECK_THROWS_AS(Poset::make({"p", "q"}, {}, "p"), Error);
}

TEST_CASE("relation closure is automatic") {
  Poset chain = Poset::make({"1", "p", "r"}, {{"p", "1"}, {"r", "p"}}, "1");
  CHECK(chain.leq("r", "1"));  // transitive pair was omitted from the input
  CHECK(chain.leq("r", "r"));  // reflexive pairs too
  CHECK_THROWS_AS(chain.leq("r", "zz"), Error);
}

TEST_CASE("compatibility and atoms") {
  Poset p = p2();
  CHECK(!p.compatible("p", "q"));
  CHECK(p.compatible("p", "1"));
  CHECK(p.compatible("q", "1"));
  CHECK(p.atoms() == std::vector<std::string>{"p", "q"});
  CHECK_THROWS_AS(p.compatible("p", "zz"), Error);

  Poset diamond = Poset::make({"1", "p", "q", "r"},
                              {{"p", "1"}, {"q", "1"}, {"r", "p"}, {"r", "q"}}, "1");
  CHECK(diamond.compatible("p", "q"));  // common lower bound r
  CHECK(diamond.atoms() == std::vector<std::string>{"r"});
}

TEST_CASE("dense sets") {
  Poset p = p2();
  CHECK(p.is_dense(p.atoms()));  // every condition bounds an atom
  CHECK(!p.is_dense({"1"}));     // p has no extension in {1}
  CHECK(!p.is_dense({}));
  CHECK(p.is_dense_below({"p"}, "p"));
  CHECK(!p.is_dense_below({"p"}, "1"));

  // Dense below is antitone in the condition.
  for (const auto& poset :
       {p2(), Poset::make({"1", "p", "q", "r"}, {{"p", "1"}, {"q", "1"}, {"r", "p"}}, "1")}) {
    const std::size_t n = poset.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<std::string> d;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) d.push_back(poset.id_of(static_cast<int>(i)));
      for (const auto& a : poset.elements())
        for (const auto& b : poset.elements())
          if (poset.leq(b, a) && poset.is_dense_below(d, a))
            CHECK(poset.is_dense_below(d, b));
    }
  }
}

TEST_CASE("antichains") {
  Poset p = p2();
  CHECK(p.is_maximal_antichain({"p", "q"}));
  CHECK(p.is_maximal_antichain({"1"}));
  CHECK(p.is_antichain({"p"}));
  CHECK(!p.is_maximal_antichain({"p"}));  // q is incompatible with p
  auto all = p.maximal_antichains();
  CHECK(std::count(all.begin(), all.end(), std::vector<std::string>{"p", "q"}) == 1);
  CHECK(std::count(all.begin(), all.end(), std::vector<std::string>{"1"}) == 1);
  CHECK(all.size() == 2);
}

TEST_CASE("generic filters are the atom closures") {
  Poset p = p2();
  auto gs = generic_filters(p);
  REQUIRE(gs.size() == 2);
  CHECK(gs[0].members == std::vector<std::string>{"1", "p"});
  CHECK(gs[1].members == std::vector<std::string>{"1", "q"});

  Poset single = Poset::make({"1"}, {}, "1");
  auto gs1 = generic_filters(single);
  REQUIRE(gs1.size() == 1);
  CHECK(gs1[0].members == std::vector<std::string>{"1"});

  auto fn1 = fn_poset({"x"});
  CHECK(generic_filters(fn1).size() == 2);

  for (const auto& g : gs) {
    CHECK(is_filter(p, g));
    CHECK(meets_all_dense(p, g));
  }
  CHECK(is_filter(p, Filter({"1"})));
  CHECK(!meets_all_dense(p, Filter({"1"})));
  CHECK(!is_filter(p, Filter({"p"})));         // not upward closed
  CHECK(!is_filter(p, Filter({"1", "p", "q"})));  // not directed
}

TEST_CASE("partial-function posets") {
  CHECK(fn_poset({}).size() == 1);
  Poset one = fn_poset({"x"});
  CHECK(one.size() == 3);
  CHECK(one.top() == "{}");
  CHECK(!one.compatible("{x:0}", "{x:1}"));
  Poset two = fn_poset({"x", "y"});
  CHECK(two.size() == 9);
  CHECK(two.leq("{x:0,y:1}", "{x:0}"));
  CHECK(!two.leq("{x:0}", "{x:0,y:1}"));
  CHECK(two.compatible("{x:0}", "{y:1}"));
  CHECK_THROWS_AS(fn_poset({"a", "b", "c", "d", "e"}, 100), Error);
}

TEST_CASE("filters meeting every dense set contain an atom (small scan)") {
  for (const auto& poset : {p2(), fn_poset({"x"}),
                            Poset::make({"1", "p", "q", "r"},
                                        {{"p", "1"}, {"q", "1"}, {"r", "p"}}, "1")}) {
    auto generic = generic_filters(poset);
    const std::size_t n = poset.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<std::string> ms;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) ms.push_back(poset.id_of(static_cast<int>(i)));
      Filter f(std::move(ms));
      if (!is_filter(poset, f)) continue;
      const bool listed = std::find(generic.begin(), generic.end(), f) != generic.end();
      CHECK(meets_all_dense(poset, f) == listed);
    }
  }
}
