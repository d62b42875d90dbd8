#include "urforce/suites.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace urforce {

json SuiteReport::to_json() const {
  json j;
  j["suite"] = suite;
  j["checked"] = checked;
  j["counterexamples"] = counterexamples;
  j["ok"] = ok();
  return j;
}

namespace {

json ce(std::initializer_list<std::pair<const char*, json>> fields) {
  json j;
  for (const auto& [k, v] : fields) j[k] = v;
  return j;
}

}  // namespace

const std::vector<std::string>& catalog_urelements() {
  static const std::vector<std::string> urs = {"a", "b", "c"};
  return urs;
}

const std::vector<std::pair<std::string, Poset>>& catalog_posets() {
  static const auto posets = [] {
    std::vector<std::pair<std::string, Poset>> out;
    using Pairs = std::vector<std::pair<std::string, std::string>>;
    out.emplace_back("single", Poset::make({"1"}, {}, "1"));
    out.emplace_back("chain2", Poset::make({"1", "p"}, Pairs{{"p", "1"}}, "1"));
    out.emplace_back("p2", Poset::make({"1", "p", "q"}, Pairs{{"p", "1"}, {"q", "1"}}, "1"));
    out.emplace_back("fn1", fn_poset({"x"}));
    out.emplace_back("chain3",
                     Poset::make({"1", "p", "r"}, Pairs{{"p", "1"}, {"r", "p"}}, "1"));
    out.emplace_back("fork3", Poset::make({"1", "p", "q", "r"},
                                          Pairs{{"p", "1"}, {"q", "1"}, {"r", "1"}}, "1"));
    out.emplace_back("diamond",
                     Poset::make({"1", "p", "q", "r"},
                                 Pairs{{"p", "1"}, {"q", "1"}, {"r", "p"}, {"r", "q"}}, "1"));
    out.emplace_back("longshort",
                     Poset::make({"1", "p", "q", "r"},
                                 Pairs{{"p", "1"}, {"r", "p"}, {"q", "1"}}, "1"));
    out.emplace_back("chain4",
                     Poset::make({"1", "p", "q", "r"},
                                 Pairs{{"p", "1"}, {"q", "p"}, {"r", "q"}}, "1"));
    return out;
  }();
  return posets;
}

std::vector<PName> seed_catalog(const Poset& p, const std::vector<std::string>& urs) {
  std::vector<PName> seeds;
  const std::string& a = urs.at(0);
  const std::string& b = urs.size() > 1 ? urs.at(1) : urs.at(0);
  seeds.push_back(check_name(p, HfuValue::urelement(a)));
  seeds.push_back(check_name(p, HfuValue::urelement(b)));
  seeds.push_back(check_name(p, HfuValue::set({HfuValue::urelement(a)})));
  seeds.push_back(check_name(p, HfuValue()));

  // First incompatible pair, in the sorted element order.
  std::optional<std::pair<std::string, std::string>> pair;
  for (std::size_t i = 0; i < p.size() && !pair; ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (!p.compatible_i(static_cast<int>(i), static_cast<int>(j))) {
        pair = {p.id_of(static_cast<int>(i)), p.id_of(static_cast<int>(j))};
        break;
      }
  const std::string first_atom = p.atoms().front();
  if (pair && a != b) {
    PName::Entry e1{true, a, PName(), pair->first};
    PName::Entry e2{true, b, PName(), pair->second};
    seeds.push_back(PName::make({e1, e2}));
    PName::Entry e3{false, "", check_name(p, HfuValue::urelement(b)), pair->second};
    seeds.push_back(PName::make({e1, e3}));
  }
  {
    PName::Entry e{false, "", check_name(p, HfuValue::urelement(a)), first_atom};
    seeds.push_back(PName::make({e}));
  }
  {
    const std::string& c = urs.size() > 2 ? urs.at(2) : a;
    PName inner = PName::ur_entry(c, pair ? pair->first : first_atom);
    PName::Entry e{false, "", inner, pair ? pair->second : p.top()};
    seeds.push_back(PName::make({e}));
  }
  return seeds;
}

std::vector<NamePool> pool_catalog(const Poset& p, const std::vector<std::string>& urs,
                                   std::size_t budget) {
  const std::vector<PName> seeds = seed_catalog(p, urs);
  std::vector<NamePool> pools;
  std::set<std::string> seen;
  auto add = [&](const std::vector<PName>& chosen) {
    NamePool pool = close_pool(p, chosen, budget);
    std::string key;
    for (const auto& n : pool.names()) key += n.repr() + ";";
    if (seen.insert(std::move(key)).second) pools.push_back(std::move(pool));
  };
  add({});
  const std::size_t n = seeds.size();
  for (std::size_t i = 0; i < n; ++i) {
    add({seeds[i]});
    for (std::size_t j = i + 1; j < n; ++j) {
      add({seeds[i], seeds[j]});
      for (std::size_t k = j + 1; k < n; ++k) add({seeds[i], seeds[j], seeds[k]});
    }
  }
  return pools;
}

namespace {

std::vector<std::pair<std::string, NamePool>> session_pools(const SuiteConfig& cfg) {
  std::vector<std::pair<std::string, NamePool>> out;
  if (cfg.session && cfg.session->poset && !cfg.session->names.empty()) {
    std::vector<PName> seeds;
    for (const auto& [_, n] : cfg.session->names) seeds.push_back(n);
    out.emplace_back("session", close_pool(*cfg.session->poset, seeds, cfg.budget));
  }
  return out;
}

}  // namespace

SuiteReport run_forcing_theorem_suite(const SuiteConfig& cfg) {
  SuiteReport report;
  report.suite = "forcing-theorem";
  auto run_pool = [&](const std::string& where, const NamePool& pool) {
    ForcingEngine eng(pool);
    std::vector<Formula> formulas = generate_formulas(pool.names(), cfg.gen);
    TheoremReport tr = check_forcing_theorem(eng, formulas);
    report.checked += tr.checked;
    for (const auto& c : tr.counterexamples)
      report.counterexamples.push_back(ce({{"poset", where},
                                           {"kind", c.kind},
                                           {"where", c.where},
                                           {"formula", json::parse(c.formula)},
                                           {"lhs", c.lhs},
                                           {"rhs", c.rhs}}));
  };
  for (const auto& [name, poset] : catalog_posets())
    for (const auto& pool : pool_catalog(poset, catalog_urelements(), cfg.budget))
      run_pool(name, pool);
  for (const auto& [name, pool] : session_pools(cfg)) run_pool(name, pool);
  return report;
}

SuiteReport run_mixture_suite(const SuiteConfig& cfg) {
  SuiteReport report;
  report.suite = "mixtures";
  std::mt19937 rng(0x5eed5u);

  struct Instance {
    std::string poset_name;
    const Poset* poset;
    std::vector<PName> names;
    std::vector<std::vector<std::string>> antichains;  // nonempty
  };
  std::vector<Instance> instances;
  for (const auto& [name, poset] : catalog_posets()) {
    Instance inst;
    inst.poset_name = name;
    inst.poset = &poset;
    inst.names = close_pool(poset, seed_catalog(poset, catalog_urelements()), cfg.budget)
                     .names();
    const std::size_t n = poset.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<std::string> xs;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) xs.push_back(poset.id_of(static_cast<int>(i)));
      if (poset.is_antichain(xs)) inst.antichains.push_back(std::move(xs));
    }
    instances.push_back(std::move(inst));
  }
  if (cfg.session && cfg.session->poset && !cfg.session->names.empty()) {
    Instance inst;
    inst.poset_name = "session";
    inst.poset = &*cfg.session->poset;
    std::vector<PName> seeds;
    for (const auto& [_, n] : cfg.session->names) seeds.push_back(n);
    inst.names = close_pool(*inst.poset, seeds, cfg.budget).names();
    const std::size_t n = inst.poset->size();
    if (n < 16)
      for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::string> xs;
        for (std::size_t i = 0; i < n; ++i)
          if (mask & (std::size_t{1} << i))
            xs.push_back(inst.poset->id_of(static_cast<int>(i)));
        if (inst.poset->is_antichain(xs)) inst.antichains.push_back(std::move(xs));
      }
    if (!inst.antichains.empty()) instances.push_back(std::move(inst));
  }

  for (std::size_t sample = 0; sample < cfg.mixture_samples; ++sample) {
    const Instance& inst = instances[sample % instances.size()];
    const auto& antichain =
        inst.antichains[rng() % inst.antichains.size()];
    std::vector<std::pair<std::string, PName>> f;
    for (const auto& q : antichain)
      f.emplace_back(q, inst.names[rng() % inst.names.size()]);
    PName mixed = mix(*inst.poset, f);
    ++report.checked;
    for (const auto& [q, assigned] : f) {
      for (const auto& g : generic_filters(*inst.poset)) {
        if (!g.contains(q)) continue;
        HfuValue left = valuate(*inst.poset, mixed, g);
        HfuValue right = valuate(*inst.poset, assigned, g);
        if (left != right)
          report.counterexamples.push_back(
              ce({{"poset", inst.poset_name},
                  {"condition", q},
                  {"generic", filter_to_json(g)},
                  {"mixture", json::parse(mixed.repr())},
                  {"assigned", json::parse(assigned.repr())},
                  {"mixture_value", json::parse(left.repr())},
                  {"assigned_value", json::parse(right.repr())}}));
      }
    }
  }
  return report;
}

namespace {

bool subset_ids(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::vector<std::string>> ur_subsets(const std::vector<std::string>& urs) {
  std::vector<std::vector<std::string>> out;
  const std::size_t n = urs.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::string> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) s.push_back(urs[i]);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<LegacyName> legacy_catalog(const Poset& p, const std::vector<std::string>& urs) {
  std::vector<LegacyName> seeds;
  const std::string a = urs.at(0);
  const std::string b = urs.size() > 1 ? urs.at(1) : urs.at(0);
  seeds.push_back(LegacyName::urelement(a));
  seeds.push_back(LegacyName::urelement(b));
  seeds.push_back(LegacyName());
  const std::string first_atom = p.atoms().front();
  seeds.push_back(
      LegacyName::set({{LegacyName::urelement(a), p.top()}}));
  seeds.push_back(
      LegacyName::set({{LegacyName::urelement(a), first_atom}, {LegacyName::urelement(b), p.top()}}));
  seeds.push_back(LegacyName::set(
      {{LegacyName::set({{LegacyName::urelement(b), first_atom}}), p.top()}}));
  return legacy_subclosure(seeds);
}

}  // namespace

SuiteReport run_kernel_suite(const SuiteConfig& cfg) {
  SuiteReport report;
  report.suite = "kernel";
  auto run_pool = [&](const std::string& where, const NamePool& pool) {
    const Poset& p = pool.poset();
    const auto generics = generic_filters(p);
    for (const auto& n : pool.names()) {
      for (const auto& g : generics) {
        ++report.checked;
        const HfuValue v = valuate(p, n, g);
        const auto& kn = n.kernel();
        const auto& kv = v.kernel();
        if (!std::includes(kn.begin(), kn.end(), kv.begin(), kv.end()))
          report.counterexamples.push_back(ce({{"poset", where},
                                               {"kind", "valuation-kernel"},
                                               {"name", json::parse(n.repr())},
                                               {"generic", filter_to_json(g)}}));
      }
      for (const auto& keep : ur_subsets(catalog_urelements())) {
        ++report.checked;
        PName pur = purify(p, n, keep);
        auto validity = is_valid_name(p, pur);
        if (!validity.ok)
          report.counterexamples.push_back(ce({{"poset", where},
                                               {"kind", "purify-validity"},
                                               {"name", json::parse(n.repr())}}));
        auto kp = pur.kernel();
        if (!subset_ids(kp, keep))
          report.counterexamples.push_back(ce({{"poset", where},
                                               {"kind", "purify-kernel"},
                                               {"name", json::parse(n.repr())},
                                               {"keep", keep}}));
      }
      ++report.checked;
      if (!is_valid_name(p, set_counterpart(p, n)).ok)
        report.counterexamples.push_back(ce({{"poset", where},
                                             {"kind", "set-counterpart-validity"},
                                             {"name", json::parse(n.repr())}}));
    }
  };
  for (const auto& [name, poset] : catalog_posets()) {
    NamePool pool = close_pool(poset, seed_catalog(poset, catalog_urelements()), cfg.budget);
    run_pool(name, pool);
    for (const auto& tau : legacy_catalog(poset, catalog_urelements())) {
      ++report.checked;
      if (!is_valid_name(poset, embed_j(poset, tau)).ok)
        report.counterexamples.push_back(
            ce({{"poset", name}, {"kind", "embed-validity"}, {"legacy", json::parse(tau.repr())}}));
    }
    // Mixtures over every maximal antichain, assigned round-robin from the
    // pool, stay valid.
    const auto names = pool.names();
    if (!names.empty())
      for (const auto& antichain : poset.maximal_antichains(cfg.budget)) {
        std::vector<std::pair<std::string, PName>> f;
        for (std::size_t i = 0; i < antichain.size(); ++i)
          f.emplace_back(antichain[i], names[i % names.size()]);
        ++report.checked;
        if (!is_valid_name(poset, mix(poset, f)).ok)
          report.counterexamples.push_back(
              ce({{"poset", name}, {"kind", "mix-validity"}, {"antichain", antichain}}));
      }
  }
  for (const auto& [name, pool] : session_pools(cfg)) run_pool(name, pool);
  return report;
}

SuiteReport run_appendix_suite(const SuiteConfig& cfg) {
  SuiteReport report;
  report.suite = "appendix";
  for (const auto& [poset_name, p] : catalog_posets()) {
    NamePool base = close_pool(p, seed_catalog(p, catalog_urelements()), cfg.budget);
    const auto generics = generic_filters(p);

    // Counterpart names: agreement, and membership in the embedding's range.
    std::vector<LegacyName> legacy_from_counterparts;
    std::vector<PName> with_counterparts = base.names();
    for (const auto& n : base.names()) {
      PName sc = set_counterpart(p, n);
      with_counterparts.push_back(sc);
      ++report.checked;
      auto sigma = j_preimage(p, sc);
      if (!sigma || embed_j(p, *sigma) != sc) {
        report.counterexamples.push_back(ce({{"poset", poset_name},
                                             {"kind", "counterpart-not-in-range"},
                                             {"name", json::parse(n.repr())}}));
        continue;
      }
      legacy_from_counterparts.push_back(*sigma);
      for (const auto& g : generics) {
        ++report.checked;
        HfuValue v = valuate(p, n, g);
        HfuValue w = valuate(p, sc, g);
        const bool mutual = value_subset(w, v) && value_subset(v, w);
        const bool equal_on_sets = v.is_urelement() || v == w;
        if (!mutual || !equal_on_sets)
          report.counterexamples.push_back(ce({{"poset", poset_name},
                                               {"kind", "counterpart-valuation"},
                                               {"name", json::parse(n.repr())},
                                               {"generic", filter_to_json(g)},
                                               {"value", json::parse(v.repr())},
                                               {"counterpart_value", json::parse(w.repr())}}));
      }
    }

    // Paired pools: the embedded legacy class and the counterpart-closed new
    // class interpret to the same value sets under every generic filter.
    std::vector<LegacyName> legacy_seeds = legacy_from_counterparts;
    for (const auto& n : base.names())
      for (const auto& u : n.kernel()) legacy_seeds.push_back(LegacyName::urelement(u));
    std::vector<LegacyName> legacy_pool = legacy_subclosure(legacy_seeds);
    NamePool full = close_pool(p, with_counterparts, cfg.budget);

    for (const auto& g : generics) {
      ++report.checked;
      std::vector<HfuValue> new_values;
      for (const auto& n : full.names()) new_values.push_back(valuate(p, n, g));
      std::sort(new_values.begin(), new_values.end());
      new_values.erase(std::unique(new_values.begin(), new_values.end()), new_values.end());
      std::vector<HfuValue> legacy_values;
      for (const auto& t : legacy_pool) legacy_values.push_back(legacy_valuate(p, t, g));
      std::sort(legacy_values.begin(), legacy_values.end());
      legacy_values.erase(std::unique(legacy_values.begin(), legacy_values.end()),
                          legacy_values.end());
      if (new_values != legacy_values) {
        json missing = json::array();
        for (const auto& v : new_values)
          if (!std::binary_search(legacy_values.begin(), legacy_values.end(), v))
            missing.push_back(json::parse(v.repr()));
        json extra = json::array();
        for (const auto& v : legacy_values)
          if (!std::binary_search(new_values.begin(), new_values.end(), v))
            extra.push_back(json::parse(v.repr()));
        report.counterexamples.push_back(ce({{"poset", poset_name},
                                             {"kind", "extension-mismatch"},
                                             {"generic", filter_to_json(g)},
                                             {"only_new", missing},
                                             {"only_legacy", extra}}));
      }
    }

    // Faithfulness of the embedding on the legacy pool.
    for (const auto& s : legacy_pool)
      for (const auto& t : legacy_pool)
        for (const auto& g : generics) {
          ++report.checked;
          const bool legacy_eq = legacy_valuate(p, s, g) == legacy_valuate(p, t, g);
          const bool new_eq =
              valuate(p, embed_j(p, s), g) == valuate(p, embed_j(p, t), g);
          if (legacy_eq != new_eq)
            report.counterexamples.push_back(ce({{"poset", poset_name},
                                                 {"kind", "embedding-faithfulness"},
                                                 {"sigma", json::parse(s.repr())},
                                                 {"tau", json::parse(t.repr())},
                                                 {"generic", filter_to_json(g)}}));
        }
  }
  return report;
}

SuiteReport run_legacy_fullness_suite() {
  SuiteReport report;
  report.suite = "remark33";
  Poset p2 = Poset::make({"1", "p", "q"}, {{"p", "1"}, {"q", "1"}}, "1");
  const LegacyName a = LegacyName::urelement("a");
  const LegacyName b = LegacyName::urelement("b");
  const LegacyName xdot = LegacyName::set({{a, "p"}, {b, "q"}});

  // Every rank-one legacy name over {a,b} and the three conditions, plus the
  // bare urelements; the witness search is exhausted over this pool.
  std::vector<LegacyName> pool = {a, b};
  const std::vector<LegacyName> atoms_ = {a, b};
  const std::vector<std::string> conds = {"1", "p", "q"};
  std::vector<LegacyName::Entry> all_entries;
  for (const auto& ur : atoms_)
    for (const auto& c : conds) all_entries.push_back({ur, c});
  for (std::size_t mask = 0; mask < (std::size_t{1} << all_entries.size()); ++mask) {
    std::vector<LegacyName::Entry> es;
    for (std::size_t i = 0; i < all_entries.size(); ++i)
      if (mask & (std::size_t{1} << i)) es.push_back(all_entries[i]);
    pool.push_back(LegacyName::set(std::move(es)));
  }
  pool = legacy_subclosure(pool);

  const Formula exists_member =
      Formula::exists("y", Formula::atom(AtomKind::member, Term::var("y"), Term::legacy(xdot)));
  ++report.checked;
  if (!legacy_forces_semantic(p2, pool, "1", exists_member))
    report.counterexamples.push_back(ce({{"kind", "legacy-existential-not-forced"}}));

  for (const auto& y : pool) {
    ++report.checked;
    Formula member = Formula::atom(AtomKind::member, Term::legacy(y), Term::legacy(xdot));
    if (legacy_forces_semantic(p2, pool, "1", member))
      report.counterexamples.push_back(
          ce({{"kind", "legacy-witness-appeared"}, {"name", json::parse(y.repr())}}));
  }

  // The translated name in the new calculus has a mixture witness at the top.
  PName xnew = PName::make({PName::Entry{false, "", check_name(p2, HfuValue::urelement("a")), "p"},
                            PName::Entry{false, "", check_name(p2, HfuValue::urelement("b")), "q"}});
  NamePool npool = close_pool(p2, {xnew});
  ForcingEngine eng(npool);
  const Formula exists_new =
      Formula::exists("y", Formula::atom(AtomKind::member, Term::var("y"), Term::constant(xnew)));
  WitnessResult w = find_witness(eng, "1", exists_new);
  ++report.checked;
  PName expected = PName::make(
      {PName::Entry{true, "a", PName(), "p"}, PName::Entry{true, "b", PName(), "q"}});
  if (!w.name)
    report.counterexamples.push_back(ce({{"kind", "no-mixture-witness"}, {"note", w.note}}));
  else if (*w.name != expected)
    report.counterexamples.push_back(ce({{"kind", "unexpected-witness"},
                                         {"witness", json::parse(w.name->repr())},
                                         {"expected", json::parse(expected.repr())}}));
  else {
    Formula inst = Formula::atom(AtomKind::member, Term::constant(*w.name), Term::constant(xnew));
    ++report.checked;
    if (!eng.semantic("1", inst))
      report.counterexamples.push_back(ce({{"kind", "witness-not-forced"}}));
  }
  return report;
}

SuiteReport run_ultrapower_suite(const SuiteConfig& cfg) {
  (void)cfg;
  SuiteReport report;
  report.suite = "los";

  const std::vector<HfuValue> fragment = {
      HfuValue::urelement("a"),
      HfuValue::urelement("b"),
      HfuValue(),
      HfuValue::set({HfuValue::urelement("a")}),
      HfuValue::set({HfuValue()}),
      HfuValue::set({HfuValue::urelement("a"), HfuValue::urelement("b")}),
  };

  // Formula family over three function symbols: atoms, negations, pairwise
  // conjunctions.
  const std::vector<std::string> fnames = {"f1", "f2", "f3"};
  std::vector<Formula> atoms;
  for (AtomKind k : {AtomKind::member, AtomKind::equal, AtomKind::subset, AtomKind::aeq})
    for (const auto& l : fnames)
      for (const auto& r : fnames) atoms.push_back(Formula::atom(k, Term::var(l), Term::var(r)));
  for (const auto& l : fnames) atoms.push_back(Formula::is_ur(Term::var(l)));
  std::vector<Formula> formulas = atoms;
  for (const auto& f : atoms) formulas.push_back(Formula::neg(f));
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i; j < atoms.size(); ++j)
      formulas.push_back(Formula::conj(atoms[i], atoms[j]));

  for (int size = 1; size <= 4; ++size) {
    std::vector<std::string> index;
    for (int i = 0; i < size; ++i) index.push_back("i" + std::to_string(i));

    // Deterministic slice of the function space over the fragment.
    std::size_t total = 1;
    for (int i = 0; i < size; ++i) total *= fragment.size();
    const std::size_t want = 10;
    const std::size_t stride = std::max<std::size_t>(1, total / want);
    std::vector<std::map<std::string, HfuValue>> tables;
    for (std::size_t code = 0; code < total; code += stride) {
      std::map<std::string, HfuValue> table;
      std::size_t c = code;
      for (int i = 0; i < size; ++i) {
        table[index[i]] = fragment[c % fragment.size()];
        c /= fragment.size();
      }
      tables.push_back(std::move(table));
    }

    for (std::size_t i = 0; i < tables.size(); ++i)
      for (std::size_t j = i; j < tables.size(); ++j)
        for (std::size_t k = j; k < tables.size(); ++k) {
          std::vector<std::pair<std::string, std::map<std::string, HfuValue>>> fs = {
              {"f1", tables[i]}, {"f2", tables[j]}, {"f3", tables[k]}};
          for (const auto& gen : index) {
            Ultrafilter uf{index, gen};
            for (const auto& phi : formulas) {
              ++report.checked;
              LosResult r = internal_ultrapower(fs, uf, phi);
              if (r.quotient_side != r.pointwise_side) {
                report.counterexamples.push_back(
                    ce({{"index_size", size},
                        {"generator", gen},
                        {"functions", json::array({i, j, k})},
                        {"formula", json::parse(phi.repr())},
                        {"quotient", r.quotient_side},
                        {"pointwise", r.pointwise_side}}));
                if (report.counterexamples.size() > 16) return report;
              }
            }
          }
        }
  }
  return report;
}

namespace {

// Second route through the four conditions, on bitmask families. The primary
// implementation works on id vectors; this one never leaves integers.
bool ideal_closure_masks(int pool_size, const std::vector<bool>& family) {
  const unsigned full = (1u << pool_size) - 1u;
  for (unsigned s = 0; s <= full; ++s) {
    if (!family[s]) continue;
    for (unsigned t = 0; t <= full; ++t)
      if (family[t] && !family[s | t]) return false;
    for (unsigned t = s;; t = (t - 1) & s) {
      if (!family[t]) return false;
      if (t == 0) break;
    }
  }
  for (int i = 0; i < pool_size; ++i)
    if (!family[1u << i]) return false;
  return true;
}

bool ideal_oracle_masks(int pool_size, const std::vector<bool>& family) {
  const unsigned full = (1u << pool_size) - 1u;
  if (family[full]) return false;  // the full pool is excluded, even when empty
  return ideal_closure_masks(pool_size, family);
}

Ideal ideal_from_masks(const std::vector<std::string>& pool, const std::vector<bool>& family) {
  Ideal ideal;
  ideal.pool = pool;
  for (unsigned s = 0; s < family.size(); ++s) {
    if (!family[s]) continue;
    std::vector<std::string> set;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (s & (1u << i)) set.push_back(pool[i]);
    ideal.family.push_back(std::move(set));
  }
  return ideal;
}

}  // namespace

SuiteReport run_ideal_suite(const SuiteConfig& cfg) {
  (void)cfg;
  SuiteReport report;
  report.suite = "ideals";
  const std::vector<std::string> all_urs = catalog_urelements();
  for (std::size_t pool_size = 0; pool_size <= all_urs.size(); ++pool_size) {
    std::vector<std::string> pool(all_urs.begin(), all_urs.begin() + pool_size);
    const unsigned subsets = 1u << pool_size;
    const std::size_t families = std::size_t{1} << subsets;
    for (std::size_t fam_mask = 0; fam_mask < families; ++fam_mask) {
      std::vector<bool> family(subsets, false);
      for (unsigned s = 0; s < subsets; ++s)
        if (fam_mask & (std::size_t{1} << s)) family[s] = true;
      Ideal ideal = ideal_from_masks(pool, family);
      ++report.checked;
      const bool primary = is_a_ideal(ideal).ok;
      const bool oracle = ideal_oracle_masks(static_cast<int>(pool_size), family);
      if (primary != oracle) {
        report.counterexamples.push_back(ce({{"kind", "ideal-check-disagrees"},
                                             {"ideal", ideal_to_json(ideal)},
                                             {"primary", primary},
                                             {"oracle", oracle}}));
        continue;
      }
      // The swap construction relies on the three closure conditions only;
      // over a finite pool no nonempty family passes the exclusion condition
      // as well, so swaps are exercised on the closure-satisfying families.
      if (!ideal_closure_masks(static_cast<int>(pool_size), family)) continue;
      for (const auto& A : ideal.family)
        for (const auto& a : A) {
          bool has_outside = A.size() < pool.size();
          if (!has_outside) continue;
          ++report.checked;
          Automorphism pi = ideal_swap(a, A, ideal);
          bool moves_a = pi.apply(a) != a;
          bool fixes_rest = true;
          for (const auto& u : A)
            if (u != a && pi.apply(u) != u) fixes_rest = false;
          std::set<std::vector<std::string>> fam_set(ideal.family.begin(), ideal.family.end());
          bool preserves = true;
          for (const auto& s : ideal.family) {
            std::vector<std::string> image;
            for (const auto& u : s) image.push_back(pi.apply(u));
            std::sort(image.begin(), image.end());
            if (!fam_set.count(image)) preserves = false;
          }
          if (!moves_a || !fixes_rest || !preserves)
            report.counterexamples.push_back(ce({{"kind", "ideal-swap-broken"},
                                                 {"ideal", ideal_to_json(ideal)},
                                                 {"a", a},
                                                 {"A", A}}));
        }
    }
  }
  return report;
}

SuiteReport run_genericity_suite(int max_elements) {
  SuiteReport report;
  report.suite = "genericity";
  for (int n = 1; n <= max_elements; ++n) {
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) ids.push_back("e" + std::to_string(i));
    const int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pair_list;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pair_list.emplace_back(i, j);
    std::size_t total = 1;
    for (int i = 0; i < pairs; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      // Each unordered pair is unrelated, i<j, or j<i.
      std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
      for (int i = 0; i < n; ++i) leq[i][i] = true;
      std::size_t c = code;
      for (int k = 0; k < pairs; ++k) {
        const int state = static_cast<int>(c % 3);
        c /= 3;
        if (state == 1) leq[pair_list[k].first][pair_list[k].second] = true;
        if (state == 2) leq[pair_list[k].second][pair_list[k].first] = true;
      }
      bool transitive = true;
      for (int x = 0; x < n && transitive; ++x)
        for (int y = 0; y < n && transitive; ++y) {
          if (!leq[x][y]) continue;
          for (int z = 0; z < n; ++z)
            if (leq[y][z] && !leq[x][z]) {
              transitive = false;
              break;
            }
        }
      if (!transitive) continue;
      int top = -1;
      for (int t = 0; t < n && top < 0; ++t) {
        bool is_top = true;
        for (int x = 0; x < n; ++x)
          if (!leq[x][t]) is_top = false;
        if (is_top) top = t;
      }
      if (top < 0) continue;
      std::vector<std::pair<std::string, std::string>> rel;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (x != y && leq[x][y]) rel.emplace_back(ids[x], ids[y]);
      Poset p = Poset::make(ids, rel, ids[top]);

      const std::vector<Filter> generic = generic_filters(p);
      auto is_generic_listed = [&](const Filter& f) {
        return std::find(generic.begin(), generic.end(), f) != generic.end();
      };
      // Every atom-principal filter is a filter meeting all dense sets.
      for (const auto& g : generic) {
        ++report.checked;
        if (!is_filter(p, g) || !meets_all_dense(p, g))
          report.counterexamples.push_back(
              ce({{"kind", "atom-filter-not-generic"}, {"poset", poset_to_json(p)}}));
      }
      // Every filter meeting all dense sets is atom-principal.
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::string> ms;
        for (int i = 0; i < n; ++i)
          if (mask & (std::size_t{1} << i)) ms.push_back(ids[i]);
        Filter f(std::move(ms));
        if (!is_filter(p, f)) continue;
        ++report.checked;
        if (meets_all_dense(p, f) != is_generic_listed(f))
          report.counterexamples.push_back(ce({{"kind", "genericity-mismatch"},
                                               {"poset", poset_to_json(p)},
                                               {"filter", filter_to_json(f)}}));
      }
    }
  }
  return report;
}

std::vector<SuiteReport> run_all_suites(const SuiteConfig& cfg) {
  std::vector<SuiteReport> out;
  out.push_back(run_forcing_theorem_suite(cfg));
  out.push_back(run_mixture_suite(cfg));
  out.push_back(run_kernel_suite(cfg));
  out.push_back(run_appendix_suite(cfg));
  out.push_back(run_legacy_fullness_suite());
  out.push_back(run_ultrapower_suite(cfg));
  out.push_back(run_ideal_suite(cfg));
  return out;
}

SuiteReport run_suite_by_name(const std::string& name, const SuiteConfig& cfg) {
  if (name == "forcing-theorem") return run_forcing_theorem_suite(cfg);
  if (name == "mixtures") return run_mixture_suite(cfg);
  if (name == "kernel") return run_kernel_suite(cfg);
  if (name == "appendix") return run_appendix_suite(cfg);
  if (name == "remark33") return run_legacy_fullness_suite();
  if (name == "los") return run_ultrapower_suite(cfg);
  if (name == "ideals") return run_ideal_suite(cfg);
  fail_usage("unknown suite: " + name);
}

}  // namespace urforce
