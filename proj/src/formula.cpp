#include "urforce/formula.hpp"

#include <algorithm>

namespace urforce {

const char* atom_kind_token(AtomKind k) {
  switch (k) {
    case AtomKind::member: return "in";
    case AtomKind::equal: return "eq";
    case AtomKind::subset: return "sub";
    case AtomKind::aeq: return "aeq";
  }
  return "?";
}

AtomKind atom_kind_from_token(const std::string& t) {
  if (t == "in") return AtomKind::member;
  if (t == "eq") return AtomKind::equal;
  if (t == "sub") return AtomKind::subset;
  if (t == "aeq") return AtomKind::aeq;
  fail_parse("unknown atom kind: " + t);
}

Term Term::var(std::string v) {
  Term t;
  t.kind_ = Kind::variable;
  t.repr_ = "{\"var\":" + json_quote(v) + "}";
  t.var_ = std::move(v);
  return t;
}

Term Term::constant(PName n) {
  Term t;
  t.kind_ = Kind::name_const;
  t.repr_ = "{\"const\":" + n.repr() + "}";
  t.name_ = std::move(n);
  return t;
}

Term Term::legacy(LegacyName n) {
  Term t;
  t.kind_ = Kind::legacy_const;
  t.repr_ = "{\"lconst\":" + n.repr() + "}";
  t.legacy_ = std::move(n);
  return t;
}

struct Formula::Node {
  Kind kind = Kind::atom;
  AtomKind akind = AtomKind::member;
  Term lhs, rhs, arg;
  std::shared_ptr<const Node> a, b;
  std::string var;
  std::string repr;
  int depth = 0;
};

Formula Formula::atom(AtomKind k, Term lhs, Term rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::atom;
  n->akind = k;
  n->repr = std::string("{\"atom\":{\"kind\":\"") + atom_kind_token(k) +
            "\",\"lhs\":" + lhs.repr() + ",\"rhs\":" + rhs.repr() + "}}";
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return Formula(std::move(n));
}

Formula Formula::is_ur(Term t) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::is_ur;
  n->repr = "{\"A\":" + t.repr() + "}";
  n->arg = std::move(t);
  return Formula(std::move(n));
}

Formula Formula::neg(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::neg;
  n->repr = "{\"not\":" + f.repr() + "}";
  n->depth = f.depth() + 1;
  n->a = std::move(f.node_);
  return Formula(std::move(n));
}

Formula Formula::conj(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::conj;
  n->repr = "{\"and\":[" + a.repr() + "," + b.repr() + "]}";
  n->depth = std::max(a.depth(), b.depth()) + 1;
  n->a = std::move(a.node_);
  n->b = std::move(b.node_);
  return Formula(std::move(n));
}

Formula Formula::exists(std::string var, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::exists;
  n->repr = "{\"exists\":{\"var\":" + json_quote(var) + ",\"body\":" + body.repr() + "}}";
  n->depth = body.depth() + 1;
  n->var = std::move(var);
  n->a = std::move(body.node_);
  return Formula(std::move(n));
}

Formula::Kind Formula::kind() const { return node_->kind; }
AtomKind Formula::atom_kind() const { return node_->akind; }
const Term& Formula::lhs() const { return node_->lhs; }
const Term& Formula::rhs() const { return node_->rhs; }
const Term& Formula::arg() const { return node_->arg; }
Formula Formula::child() const { return Formula(node_->a); }
Formula Formula::left() const { return Formula(node_->a); }
Formula Formula::right() const { return Formula(node_->b); }
const std::string& Formula::var() const { return node_->var; }
const std::string& Formula::repr() const { return node_->repr; }
int Formula::depth() const { return node_->depth; }

namespace {

Term subst_term(const Term& t, const std::string& var, const Term& repl) {
  if (t.kind() == Term::Kind::variable && t.var_name() == var) return repl;
  return t;
}

}  // namespace

Formula Formula::substitute(const std::string& var, const Term& t) const {
  switch (kind()) {
    case Kind::atom:
      return atom(atom_kind(), subst_term(lhs(), var, t), subst_term(rhs(), var, t));
    case Kind::is_ur:
      return is_ur(subst_term(arg(), var, t));
    case Kind::neg:
      return neg(Formula(node_->a).substitute(var, t));
    case Kind::conj:
      return conj(Formula(node_->a).substitute(var, t), Formula(node_->b).substitute(var, t));
    case Kind::exists:
      if (node_->var == var) return *this;  // shadowed
      return exists(node_->var, Formula(node_->a).substitute(var, t));
  }
  fail_invalid("unreachable formula kind");
}

void Formula::collect_constants(std::vector<PName>& out) const {
  auto term = [&out](const Term& t) {
    if (t.kind() == Term::Kind::name_const) out.push_back(t.name());
  };
  switch (kind()) {
    case Kind::atom:
      term(lhs());
      term(rhs());
      break;
    case Kind::is_ur:
      term(arg());
      break;
    case Kind::neg:
    case Kind::exists:
      Formula(node_->a).collect_constants(out);
      break;
    case Kind::conj:
      Formula(node_->a).collect_constants(out);
      Formula(node_->b).collect_constants(out);
      break;
  }
}

std::set<std::string> Formula::free_vars() const {
  std::set<std::string> out;
  auto term = [&out](const Term& t) {
    if (t.kind() == Term::Kind::variable) out.insert(t.var_name());
  };
  switch (kind()) {
    case Kind::atom:
      term(lhs());
      term(rhs());
      break;
    case Kind::is_ur:
      term(arg());
      break;
    case Kind::neg:
      return Formula(node_->a).free_vars();
    case Kind::conj: {
      out = Formula(node_->a).free_vars();
      auto r = Formula(node_->b).free_vars();
      out.insert(r.begin(), r.end());
      break;
    }
    case Kind::exists: {
      out = Formula(node_->a).free_vars();
      out.erase(node_->var);
      break;
    }
  }
  return out;
}

Formula f_or(Formula a, Formula b) {
  return Formula::neg(Formula::conj(Formula::neg(std::move(a)), Formula::neg(std::move(b))));
}

Formula f_implies(Formula a, Formula b) {
  return Formula::neg(Formula::conj(std::move(a), Formula::neg(std::move(b))));
}

Formula f_forall(std::string var, Formula body) {
  return Formula::neg(Formula::exists(std::move(var), Formula::neg(std::move(body))));
}

namespace {

const AtomKind kAllKinds[] = {AtomKind::member, AtomKind::equal, AtomKind::subset,
                              AtomKind::aeq};

void push(std::vector<Formula>& out, std::set<std::string>& seen, const Formula& f,
          std::size_t cap) {
  if (out.size() >= cap) return;
  if (seen.insert(f.repr()).second) out.push_back(f);
}

}  // namespace

std::vector<Formula> generate_formulas(const std::vector<PName>& constants,
                                       const GenConfig& cfg) {
  std::vector<Term> consts;
  for (const auto& c : constants) consts.push_back(Term::constant(c));
  const Term x = Term::var("x"), y = Term::var("y");

  std::vector<Formula> out;
  std::set<std::string> seen;
  const std::size_t cap = cfg.cap;

  std::vector<Formula> atoms;
  for (AtomKind k : kAllKinds)
    for (const auto& c1 : consts)
      for (const auto& c2 : consts) atoms.push_back(Formula::atom(k, c1, c2));
  for (const auto& c : consts) atoms.push_back(Formula::is_ur(c));
  for (const auto& a : atoms) push(out, seen, a, cap);
  if (cfg.depth < 1) return out;

  for (const auto& a : atoms) push(out, seen, Formula::neg(a), cap);

  // Conjunctions of atoms sharing a constant pair keep the family near-linear
  // in the number of constants.
  for (std::size_t i = 0; i < consts.size(); ++i)
    for (std::size_t j = i; j < consts.size(); ++j) {
      std::vector<Formula> local;
      for (AtomKind k : kAllKinds) {
        local.push_back(Formula::atom(k, consts[i], consts[j]));
        if (i != j) {
          local.push_back(Formula::atom(k, consts[j], consts[i]));
          local.push_back(Formula::atom(k, consts[i], consts[i]));
          local.push_back(Formula::atom(k, consts[j], consts[j]));
        }
      }
      local.push_back(Formula::is_ur(consts[i]));
      if (i != j) local.push_back(Formula::is_ur(consts[j]));
      for (std::size_t u = 0; u < local.size(); ++u)
        for (std::size_t v = u; v < local.size(); ++v) {
          push(out, seen, Formula::conj(local[u], local[v]), cap);
          if (cfg.depth >= 2) push(out, seen, Formula::neg(Formula::conj(local[u], local[v])), cap);
        }
    }

  std::vector<Formula> one_var_atoms;  // open in x
  for (AtomKind k : kAllKinds) {
    for (const auto& c : consts) {
      one_var_atoms.push_back(Formula::atom(k, x, c));
      one_var_atoms.push_back(Formula::atom(k, c, x));
    }
    one_var_atoms.push_back(Formula::atom(k, x, x));
  }
  one_var_atoms.push_back(Formula::is_ur(x));

  if (cfg.quantifiers >= 1)
    for (const auto& a : one_var_atoms) push(out, seen, Formula::exists("x", a), cap);

  if (cfg.depth >= 2) {
    for (const auto& a : atoms) push(out, seen, Formula::neg(Formula::neg(a)), cap);
    if (cfg.quantifiers >= 1) {
      for (const auto& a : one_var_atoms) {
        push(out, seen, Formula::exists("x", Formula::neg(a)), cap);
        push(out, seen, Formula::neg(Formula::exists("x", a)), cap);
      }
      for (const auto& c : consts) {
        std::vector<Formula> local;
        for (AtomKind k : kAllKinds) {
          local.push_back(Formula::atom(k, x, c));
          local.push_back(Formula::atom(k, c, x));
        }
        local.push_back(Formula::is_ur(x));
        for (std::size_t u = 0; u < local.size(); ++u)
          for (std::size_t v = u; v < local.size(); ++v)
            push(out, seen, Formula::exists("x", Formula::conj(local[u], local[v])), cap);
      }
    }
    if (cfg.quantifiers >= 2)
      for (AtomKind k : kAllKinds)
        push(out, seen, Formula::exists("x", Formula::exists("y", Formula::atom(k, x, y))),
             cap);
  }
  return out;
}

}  // namespace urforce
