#include "urforce/forcing.hpp"

#include <algorithm>

namespace urforce {

bool ExtensionReport::all_ok() const {
  for (const auto& c : checks)
    if (c.applicable && !c.ok) return false;
  return true;
}

namespace {

std::string filter_repr(const Filter& g) {
  std::string out = "[";
  for (std::size_t i = 0; i < g.members.size(); ++i) {
    if (i) out += ',';
    out += json_quote(g.members[i]);
  }
  return out + "]";
}

}  // namespace

std::pair<Extension, ExtensionReport> build_extension(const NamePool& pool, const Filter& g) {
  const Poset& p = pool.poset();
  if (!is_filter(p, g)) fail_invalid("not a filter: " + filter_repr(g));
  Extension ext;
  ext.generic = g;
  for (const auto& n : pool.names()) {
    HfuValue v = valuate(p, n, g);
    ext.valuation.emplace(n.repr(), v);
    ext.values.push_back(std::move(v));
  }
  std::sort(ext.values.begin(), ext.values.end());
  ext.values.erase(std::unique(ext.values.begin(), ext.values.end()), ext.values.end());

  ExtensionReport report;
  auto add = [&report](std::string item, bool ok, bool applicable, std::string detail) {
    report.checks.push_back({std::move(item), ok, applicable, std::move(detail)});
  };

  // Ground values named by check names reappear unchanged.
  {
    bool ok = true;
    std::string detail;
    for (const auto& n : pool.names()) {
      auto ground = decode_check_name(p, n);
      if (!ground) continue;
      const HfuValue& v = ext.valuation.at(n.repr());
      if (v != *ground ||
          !std::binary_search(ext.values.begin(), ext.values.end(), *ground)) {
        ok = false;
        detail = n.repr();
        break;
      }
    }
    add("ground-values-present", ok, true, std::move(detail));
  }

  // The filter's own name interprets as the encoded filter.
  {
    PName gamma = gamma_name(p);
    bool applicable = pool.contains(gamma);
    bool ok = true;
    std::string detail;
    if (applicable) {
      std::vector<HfuValue> encoded;
      for (const auto& id : g.members) encoded.push_back(condition_value(p, id));
      HfuValue expect = HfuValue::set(std::move(encoded));
      ok = ext.valuation.at(gamma.repr()) == expect;
      if (!ok) detail = expect.repr();
    }
    add("filter-value-present", ok, applicable, std::move(detail));
  }

  // Transitivity of the value set.
  {
    bool ok = true;
    std::string detail;
    for (const auto& v : ext.values) {
      if (v.is_urelement()) continue;
      for (const auto& m : v.members())
        if (!std::binary_search(ext.values.begin(), ext.values.end(), m)) {
          ok = false;
          detail = m.repr() + " missing from " + v.repr();
          break;
        }
      if (!ok) break;
    }
    add("transitive", ok, true, std::move(detail));
  }

  // Urelements upstairs are exactly the urelements mentioned downstairs.
  {
    std::vector<std::string> ground_urs;
    for (const auto& n : pool.names()) {
      const auto& k = n.kernel();
      ground_urs.insert(ground_urs.end(), k.begin(), k.end());
    }
    std::sort(ground_urs.begin(), ground_urs.end());
    ground_urs.erase(std::unique(ground_urs.begin(), ground_urs.end()), ground_urs.end());
    std::vector<std::string> ext_urs;
    for (const auto& v : ext.values)
      if (v.is_urelement()) ext_urs.push_back(v.ur_id());
    std::sort(ext_urs.begin(), ext_urs.end());
    bool ok = ground_urs == ext_urs;
    add("urelements-match", ok, true,
        ok ? "" : "ground vs extension urelement sets differ");
  }

  // Interpretation never grows kernels.
  {
    bool ok = true;
    std::string detail;
    for (const auto& n : pool.names()) {
      const auto& kv = ext.valuation.at(n.repr()).kernel();
      const auto& kn = n.kernel();
      if (!std::includes(kn.begin(), kn.end(), kv.begin(), kv.end())) {
        ok = false;
        detail = n.repr();
        break;
      }
    }
    add("kernel-bound", ok, true, std::move(detail));
  }

  // Every urelement set upstairs sits inside a ground set of urelements.
  {
    std::vector<std::string> ground_urs;
    for (const auto& n : pool.names()) {
      const auto& k = n.kernel();
      ground_urs.insert(ground_urs.end(), k.begin(), k.end());
    }
    std::sort(ground_urs.begin(), ground_urs.end());
    ground_urs.erase(std::unique(ground_urs.begin(), ground_urs.end()), ground_urs.end());
    bool ok = true;
    std::string detail;
    for (const auto& v : ext.values) {
      const auto& k = v.kernel();
      if (!std::includes(ground_urs.begin(), ground_urs.end(), k.begin(), k.end())) {
        ok = false;
        detail = v.repr();
        break;
      }
    }
    add("urelement-cover", ok, true, std::move(detail));
  }

  return {std::move(ext), std::move(report)};
}

namespace {

bool eval_atom_value(AtomKind k, const HfuValue& a, const HfuValue& b) {
  switch (k) {
    case AtomKind::member: return value_in(a, b);
    case AtomKind::equal: return a == b;
    case AtomKind::subset: return value_subset(a, b);
    case AtomKind::aeq: return value_aeq(a, b);
  }
  return false;
}

struct SatContext {
  const Poset& p;
  const Extension& ext;
  std::map<std::string, HfuValue> env;

  HfuValue term_value(const Term& t) const {
    switch (t.kind()) {
      case Term::Kind::variable: {
        auto it = env.find(t.var_name());
        if (it == env.end()) fail_invalid("unbound variable: " + t.var_name());
        return it->second;
      }
      case Term::Kind::name_const: {
        auto it = ext.valuation.find(t.name().repr());
        if (it != ext.valuation.end()) return it->second;
        return valuate(p, t.name(), ext.generic);
      }
      case Term::Kind::legacy_const:
        return legacy_valuate(p, t.legacy_name(), ext.generic);
    }
    fail_invalid("unreachable term kind");
  }

  bool eval(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::atom:
        return eval_atom_value(f.atom_kind(), term_value(f.lhs()), term_value(f.rhs()));
      case Formula::Kind::is_ur:
        return term_value(f.arg()).is_urelement();
      case Formula::Kind::neg:
        return !eval(f.child());
      case Formula::Kind::conj:
        return eval(f.left()) && eval(f.right());
      case Formula::Kind::exists: {
        Formula body = f.child();
        auto saved = env.find(f.var());
        std::optional<HfuValue> old;
        if (saved != env.end()) old = saved->second;
        for (const auto& v : ext.values) {
          env[f.var()] = v;
          if (eval(body)) {
            if (old)
              env[f.var()] = *old;
            else
              env.erase(f.var());
            return true;
          }
        }
        if (old)
          env[f.var()] = *old;
        else
          env.erase(f.var());
        return false;
      }
    }
    fail_invalid("unreachable formula kind");
  }
};

}  // namespace

bool satisfies(const Poset& p, const Extension& ext, const Formula& f) {
  SatContext ctx{p, ext, {}};
  return ctx.eval(f);
}

ForcingEngine::ForcingEngine(NamePool pool) : pool_(std::move(pool)) {
  generics_ = generic_filters(pool_.poset());
  extensions_.resize(generics_.size());
}

const Extension& ForcingEngine::extension(std::size_t gi) {
  if (!extensions_[gi]) {
    Extension ext;
    ext.generic = generics_[gi];
    const Poset& p = pool_.poset();
    for (const auto& n : pool_.names()) {
      HfuValue v = valuate(p, n, ext.generic);
      ext.valuation.emplace(n.repr(), v);
      ext.values.push_back(std::move(v));
    }
    std::sort(ext.values.begin(), ext.values.end());
    ext.values.erase(std::unique(ext.values.begin(), ext.values.end()), ext.values.end());
    extensions_[gi] = std::move(ext);
  }
  return *extensions_[gi];
}

const PName& ForcingEngine::const_name(const Term& t) const {
  if (t.kind() != Term::Kind::name_const)
    fail_invalid("syntactic forcing needs name constants, got " + t.repr());
  if (!pool_.contains(t.name())) fail_invalid("constant not in pool: " + t.name().repr());
  return t.name();
}

bool ForcingEngine::dense_below(int p, const std::vector<bool>& d) const {
  return poset().is_dense_below_i(d, p);
}

bool ForcingEngine::star_atom(int p, AtomKind k, const PName& x1, const PName& x2) {
  const Poset& ps = poset();
  const int n = static_cast<int>(ps.size());
  switch (k) {
    case AtomKind::aeq: {
      // Dense set: either some shared urelement entry is pinned below q, or q
      // excludes every urelement entry on both sides.
      std::vector<bool> d(n, false);
      for (int q = 0; q < n; ++q) {
        bool shared = false;
        for (const auto& e1 : x1.entries()) {
          if (!e1.is_ur) continue;
          for (const auto& e2 : x2.entries()) {
            if (!e2.is_ur || e2.ur != e1.ur) continue;
            if (ps.leq_i(q, ps.index_of(e1.cond)) && ps.leq_i(q, ps.index_of(e2.cond))) {
              shared = true;
              break;
            }
          }
          if (shared) break;
        }
        bool excludes = true;
        for (const auto& e1 : x1.entries())
          if (e1.is_ur && ps.compatible_i(q, ps.index_of(e1.cond))) {
            excludes = false;
            break;
          }
        if (excludes)
          for (const auto& e2 : x2.entries())
            if (e2.is_ur && ps.compatible_i(q, ps.index_of(e2.cond))) {
              excludes = false;
              break;
            }
        d[q] = shared || excludes;
      }
      return dense_below(p, d);
    }
    case AtomKind::member: {
      std::vector<bool> d(n, false);
      for (int q = 0; q < n; ++q) {
        for (const auto& e : x2.entries()) {
          if (e.is_ur) continue;
          if (!ps.leq_i(q, ps.index_of(e.cond))) continue;
          if (!pool_.contains(e.sub)) continue;
          Formula eq = Formula::atom(AtomKind::equal, Term::constant(e.sub),
                                     Term::constant(x1));
          if (star_i(q, eq)) {
            d[q] = true;
            break;
          }
        }
      }
      return dense_below(p, d);
    }
    case AtomKind::subset: {
      for (const auto& e : x1.entries()) {
        if (e.is_ur) continue;
        if (!pool_.contains(e.sub)) continue;
        const int r = ps.index_of(e.cond);
        for (int q = 0; q < n; ++q) {
          if (!ps.leq_i(q, p) || !ps.leq_i(q, r)) continue;
          Formula mem = Formula::atom(AtomKind::member, Term::constant(e.sub),
                                      Term::constant(x2));
          if (!star_i(q, mem)) return false;
        }
      }
      return true;
    }
    case AtomKind::equal: {
      Formula s1 = Formula::atom(AtomKind::subset, Term::constant(x1), Term::constant(x2));
      Formula s2 = Formula::atom(AtomKind::subset, Term::constant(x2), Term::constant(x1));
      Formula ae = Formula::atom(AtomKind::aeq, Term::constant(x1), Term::constant(x2));
      return star_i(p, s1) && star_i(p, s2) && star_i(p, ae);
    }
  }
  return false;
}

bool ForcingEngine::star_i(int p, const Formula& f) {
  std::string key = std::to_string(p) + "|" + f.repr();
  auto it = star_memo_.find(key);
  if (it != star_memo_.end()) return it->second;
  bool result = false;
  const Poset& ps = poset();
  const int n = static_cast<int>(ps.size());
  switch (f.kind()) {
    case Formula::Kind::atom:
      result = star_atom(p, f.atom_kind(), const_name(f.lhs()), const_name(f.rhs()));
      break;
    case Formula::Kind::is_ur: {
      const PName& x = const_name(f.arg());
      std::vector<bool> d(n, false);
      for (int q = 0; q < n; ++q)
        for (const auto& e : x.entries())
          if (e.is_ur && ps.leq_i(q, ps.index_of(e.cond))) {
            d[q] = true;
            break;
          }
      result = dense_below(p, d);
      break;
    }
    case Formula::Kind::neg: {
      Formula body = f.child();
      result = true;
      for (int q = 0; q < n; ++q)
        if (ps.leq_i(q, p) && star_i(q, body)) {
          result = false;
          break;
        }
      break;
    }
    case Formula::Kind::conj:
      result = star_i(p, f.left()) && star_i(p, f.right());
      break;
    case Formula::Kind::exists: {
      Formula body = f.child();
      std::vector<bool> d(n, false);
      for (int q = 0; q < n; ++q)
        for (const auto& z : pool_.names()) {
          Formula inst = body.substitute(f.var(), Term::constant(z));
          if (star_i(q, inst)) {
            d[q] = true;
            break;
          }
        }
      result = dense_below(p, d);
      break;
    }
  }
  star_memo_.emplace(std::move(key), result);
  return result;
}

bool ForcingEngine::star(const std::string& p, const Formula& f) {
  return star_i(poset().index_of(p), f);
}

bool ForcingEngine::sat_at(std::size_t gi, const Formula& f) {
  std::string key = std::to_string(gi) + "|" + f.repr();
  auto it = sat_memo_.find(key);
  if (it != sat_memo_.end()) return it->second;
  bool result = satisfies(poset(), extension(gi), f);
  sat_memo_.emplace(std::move(key), result);
  return result;
}

bool ForcingEngine::semantic(const std::string& p, const Formula& f) {
  for (std::size_t gi = 0; gi < generics_.size(); ++gi) {
    if (!generics_[gi].contains(p)) continue;
    if (!sat_at(gi, f)) return false;
  }
  return true;
}

namespace {

void require_constants_pooled(const NamePool& pool, const Formula& f) {
  std::vector<PName> constants;
  f.collect_constants(constants);
  for (const auto& c : constants)
    if (!pool.contains(c)) fail_invalid("constant not in pool: " + c.repr());
}

}  // namespace

bool forces_star(const NamePool& pool, const std::string& p, const Formula& f) {
  require_constants_pooled(pool, f);
  ForcingEngine eng(pool);
  return eng.star(p, f);
}

bool forces_semantic(const NamePool& pool, const std::string& p, const Formula& f) {
  require_constants_pooled(pool, f);
  ForcingEngine eng(pool);
  return eng.semantic(p, f);
}

TheoremReport check_forcing_theorem(ForcingEngine& eng, const std::vector<Formula>& formulas) {
  TheoremReport report;
  const Poset& ps = eng.poset();
  for (const auto& f : formulas) {
    for (const auto& p : ps.elements()) {
      const bool s = eng.star(p, f);
      const bool m = eng.semantic(p, f);
      ++report.checked;
      if (s != m) report.counterexamples.push_back({"star-vs-semantic", p, f.repr(), s, m});
    }
    for (std::size_t gi = 0; gi < eng.generics().size(); ++gi) {
      const bool truth = eng.sat_at(gi, f);
      bool forced = false;
      for (const auto& p : eng.generics()[gi].members)
        if (eng.star(p, f)) {
          forced = true;
          break;
        }
      ++report.checked;
      if (truth != forced)
        report.counterexamples.push_back(
            {"truth-lemma", filter_repr(eng.generics()[gi]), f.repr(), truth, forced});
    }
  }
  return report;
}

TheoremReport check_forcing_theorem(const NamePool& pool, const std::vector<Formula>& formulas) {
  ForcingEngine eng(pool);
  return check_forcing_theorem(eng, formulas);
}

WitnessResult find_witness(ForcingEngine& eng, const std::string& p, const Formula& exists_phi) {
  if (exists_phi.kind() != Formula::Kind::exists)
    fail_invalid("witness search needs an existential formula");
  if (!eng.semantic(p, exists_phi))
    fail_invalid("condition does not force the existential");
  const Poset& ps = eng.poset();
  const int pi = ps.index_of(p);
  Formula body = exists_phi.child();
  const std::string& var = exists_phi.var();

  // Conditions below p that force the body at some pool name.
  std::vector<int> q_set;
  std::vector<std::optional<PName>> pick(ps.size());
  for (int q = 0; q < static_cast<int>(ps.size()); ++q) {
    if (!ps.leq_i(q, pi)) continue;
    for (const auto& z : eng.pool().names()) {
      Formula inst = body.substitute(var, Term::constant(z));
      if (eng.semantic(ps.id_of(q), inst)) {
        pick[q] = z;
        q_set.push_back(q);
        break;
      }
    }
  }
  std::vector<bool> q_flag(ps.size(), false);
  for (int q : q_set) q_flag[q] = true;
  if (!ps.is_dense_below_i(q_flag, pi))
    return {std::nullopt, "no pool-name witness below some extension of " + p};

  // Greedy maximal antichain inside the witness region.
  std::vector<int> antichain;
  for (int q : q_set) {
    bool clash = false;
    for (int x : antichain)
      if (ps.compatible_i(q, x)) {
        clash = true;
        break;
      }
    if (!clash) antichain.push_back(q);
  }
  PName witness;
  if (antichain.size() == 1 && antichain[0] == pi) {
    witness = *pick[pi];  // p itself forces the body at this name; no mixing needed
  } else {
    std::vector<std::pair<std::string, PName>> assignment;
    for (int q : antichain) assignment.emplace_back(ps.id_of(q), *pick[q]);
    witness = mix(ps, assignment);
  }
  Formula inst = body.substitute(var, Term::constant(witness));
  if (!eng.semantic(p, inst)) return {std::nullopt, "mixture failed the semantic check"};
  return {witness, ""};
}

WitnessResult find_witness(const NamePool& pool, const std::string& p, const Formula& exists_phi) {
  ForcingEngine eng(pool);
  return find_witness(eng, p, exists_phi);
}

bool legacy_forces_semantic(const Poset& p, const std::vector<LegacyName>& pool,
                            const std::string& cond, const Formula& f) {
  p.index_of(cond);
  for (const auto& g : generic_filters(p)) {
    if (!g.contains(cond)) continue;
    Extension ext;
    ext.generic = g;
    for (const auto& n : pool) ext.values.push_back(legacy_valuate(p, n, g));
    std::sort(ext.values.begin(), ext.values.end());
    ext.values.erase(std::unique(ext.values.begin(), ext.values.end()), ext.values.end());
    if (!satisfies(p, ext, f)) return false;
  }
  return true;
}

}  // namespace urforce
