#include <doctest.h>

#include "urforce/json_io.hpp"
#include "urforce/session.hpp"

using namespace urforce;

TEST_CASE("value grammar: arbitrary input order, canonical output") {
  json in = json::parse(R"({"set":[{"ur":"b"},{"ur":"a"},{"ur":"a"},{"set":[]}]})");
  HfuValue v = value_from_json(in);
  CHECK(value_to_json(v).dump() == R"({"set":[{"set":[]},{"ur":"a"},{"ur":"b"}]})");
  CHECK(value_from_json(value_to_json(v)) == v);
  CHECK_THROWS_AS(value_from_json(json::parse(R"({"oops":1})")), Error);
  CHECK_THROWS_AS(value_from_json(json::parse(R"({"ur":7})")), Error);
}

TEST_CASE("name grammar") {
  json in = json::parse(
      R"({"pname":[[{"pname":[[{"ur":"b"},"q"]]},"1"],[{"ur":"a"},"p"]]})");
  PName n = pname_from_json(in);
  CHECK(pname_from_json(pname_to_json(n)) == n);
  CHECK(n.entries().size() == 2);
  CHECK(n.kernel() == std::vector<std::string>{"a", "b"});

  json lin = json::parse(R"({"lname":[[{"ur":"a"},"p"],[{"lname":[]},"1"]]})");
  LegacyName l = lname_from_json(lin);
  CHECK(lname_from_json(lname_to_json(l)) == l);
  CHECK(lname_from_json(json::parse(R"({"ur":"a"})")).is_urelement());
  CHECK_THROWS_AS(pname_from_json(json::parse(R"({"pname":[["x"]]})")), Error);
}

TEST_CASE("poset grammar closes the relation") {
  json in = json::parse(
      R"({"elements":["1","p","r"],"leq":[["p","1"],["r","p"]],"top":"1"})");
  Poset p = poset_from_json(in);
  CHECK(p.leq("r", "1"));
  json out = poset_to_json(p);
  Poset round = poset_from_json(out);
  CHECK(round.elements() == p.elements());
  for (const auto& a : p.elements())
    for (const auto& b : p.elements()) CHECK(round.leq(a, b) == p.leq(a, b));
  CHECK_THROWS_AS(poset_from_json(json::parse(R"({"elements":["p"],"top":"x"})")), Error);
}

TEST_CASE("filters, formulas, ideals") {
  Filter f = filter_from_json(json::parse(R"(["q","1","q"])"));
  CHECK(f.members == std::vector<std::string>{"1", "q"});
  CHECK(filter_to_json(f).dump() == R"(["1","q"])");

  json fin = json::parse(R"({"exists":{"var":"x","body":{"and":[
      {"A":{"var":"x"}},
      {"not":{"atom":{"kind":"in","lhs":{"var":"x"},"rhs":{"const":{"pname":[]}}}}}]}}})");
  Formula formula = formula_from_json(fin);
  CHECK(formula_from_json(formula_to_json(formula)) == formula);
  CHECK(formula.depth() == 3);
  CHECK_THROWS_AS(formula_from_json(json::parse(R"({"or":[]})")), Error);

  Ideal ideal = ideal_from_json(
      json::parse(R"({"pool":["b","a"],"family":[["a"],[],["b","a"]]})"));
  CHECK(ideal.pool == std::vector<std::string>{"a", "b"});
  CHECK(ideal.family.size() == 3);
  json out = ideal_to_json(ideal);
  CHECK(out["pool"] == json::parse(R"(["a","b"])"));
}

TEST_CASE("reports serialize") {
  PosetCheck pc{false, "antisymmetry", {"p", "q"}};
  json j = poset_check_to_json(pc);
  CHECK(j["ok"] == false);
  CHECK(j["law"] == "antisymmetry");

  IdealCheck ic;
  CHECK(ideal_check_to_json(ic)["ok"] == true);
}

TEST_CASE("session files") {
  json j = json::parse(R"({
    "pool": ["a", "b"],
    "poset": {"elements":["1","p","q"],"leq":[["p","1"],["q","1"]],"top":"1"},
    "names": {"x": {"pname":[[{"ur":"a"},"p"],[{"ur":"b"},"q"]]}},
    "config": {"budget": 5000, "depth": 2}
  })");
  Session s = Session::from_json(j);
  CHECK(s.pool == std::vector<std::string>{"a", "b"});
  REQUIRE(s.poset.has_value());
  CHECK(s.named("x").entries().size() == 2);
  CHECK(s.config.budget == 5000);
  CHECK(s.config.depth == 2);
  CHECK_THROWS_AS(s.named("y"), Error);

  // Invalid names are rejected at load time.
  json bad = j;
  bad["names"]["z"] = json::parse(R"({"pname":[[{"ur":"a"},"1"],[{"ur":"b"},"1"]]})");
  CHECK_THROWS_AS(Session::from_json(bad), Error);
  CHECK_THROWS_AS(Session::from_json(json::parse(R"({"config":{"budget":-1}})")), Error);

  // Names must stay inside the declared urelement pool.
  json foreign = j;
  foreign["names"]["w"] = json::parse(R"({"pname":[[{"ur":"zz"},"p"]]})");
  CHECK_THROWS_AS(Session::from_json(foreign), Error);
}
