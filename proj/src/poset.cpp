#include "urforce/poset.hpp"

#include <algorithm>

namespace urforce {

namespace {

struct Raw {
  std::vector<std::string> elems;
  std::unordered_map<std::string, int> index;
  std::vector<std::vector<bool>> leq;
};

// Dedup/sort elements and close the relation reflexively and transitively.
// Unknown ids are reported through `check`.
std::optional<Raw> prepare(const std::vector<std::string>& elements,
                           const std::vector<std::pair<std::string, std::string>>& pairs,
                           PosetCheck& check) {
  Raw r;
  r.elems = elements;
  std::sort(r.elems.begin(), r.elems.end());
  r.elems.erase(std::unique(r.elems.begin(), r.elems.end()), r.elems.end());
  if (r.elems.empty()) {
    check = {false, "nonempty", {}};
    return std::nullopt;
  }
  for (std::size_t i = 0; i < r.elems.size(); ++i) r.index[r.elems[i]] = static_cast<int>(i);
  const std::size_t n = r.elems.size();
  r.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) r.leq[i][i] = true;
  for (const auto& [a, b] : pairs) {
    auto ia = r.index.find(a), ib = r.index.find(b);
    if (ia == r.index.end() || ib == r.index.end()) {
      check = {false, "unknown-element", {ia == r.index.end() ? a : b}};
      return std::nullopt;
    }
    r.leq[ia->second][ib->second] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r.leq[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r.leq[k][j]) r.leq[i][j] = true;
  return r;
}

}  // namespace

PosetCheck Poset::validate(const std::vector<std::string>& elements,
                           const std::vector<std::pair<std::string, std::string>>& pairs,
                           const std::string& top) {
  PosetCheck check;
  auto raw = prepare(elements, pairs, check);
  if (!raw) return check;
  const std::size_t n = raw->elems.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (raw->leq[i][j] && raw->leq[j][i])
        return {false, "antisymmetry", {raw->elems[i], raw->elems[j]}};
  auto it = raw->index.find(top);
  if (it == raw->index.end()) return {false, "top-missing", {top}};
  for (std::size_t i = 0; i < n; ++i)
    if (!raw->leq[i][static_cast<std::size_t>(it->second)])
      return {false, "top-not-maximum", {raw->elems[i], top}};
  return check;
}

Poset Poset::make(std::vector<std::string> elements,
                  const std::vector<std::pair<std::string, std::string>>& pairs,
                  const std::string& top) {
  PosetCheck check = validate(elements, pairs, top);
  if (!check.ok) {
    std::string msg = "poset law violated: " + check.law;
    for (const auto& w : check.witnesses) msg += " " + w;
    fail_invalid(msg);
  }
  Poset p;
  auto raw = prepare(elements, pairs, check);
  p.elems_ = std::move(raw->elems);
  p.index_ = std::move(raw->index);
  p.leq_ = std::move(raw->leq);
  p.top_ = p.index_.at(top);
  const int n = static_cast<int>(p.elems_.size());
  for (int i = 0; i < n; ++i) {
    bool minimal = true;
    for (int j = 0; j < n && minimal; ++j)
      if (j != i && p.leq_[j][i]) minimal = false;
    if (minimal) p.atoms_.push_back(i);
  }
  return p;
}

int Poset::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) fail_invalid("unknown condition id: " + id);
  return it->second;
}

bool Poset::leq(const std::string& a, const std::string& b) const {
  return leq_[index_of(a)][index_of(b)];
}

bool Poset::compatible_i(int a, int b) const {
  const int n = static_cast<int>(elems_.size());
  for (int k = 0; k < n; ++k)
    if (leq_[k][a] && leq_[k][b]) return true;
  return false;
}

bool Poset::compatible(const std::string& a, const std::string& b) const {
  return compatible_i(index_of(a), index_of(b));
}

std::vector<std::string> Poset::atoms() const {
  std::vector<std::string> out;
  for (int i : atoms_) out.push_back(elems_[i]);
  return out;
}

std::vector<int> Poset::below(int p) const {
  std::vector<int> out;
  for (int q = 0; q < static_cast<int>(elems_.size()); ++q)
    if (leq_[q][p]) out.push_back(q);
  return out;
}

bool Poset::is_dense_below_i(const std::vector<bool>& in_d, int p) const {
  const int n = static_cast<int>(elems_.size());
  for (int q = 0; q < n; ++q) {
    if (!leq_[q][p]) continue;
    bool hit = false;
    for (int r = 0; r < n && !hit; ++r)
      if (in_d[r] && leq_[r][q]) hit = true;
    if (!hit) return false;
  }
  return true;
}

bool Poset::is_dense(const std::vector<std::string>& d) const {
  return is_dense_below(d, top());
}

bool Poset::is_dense_below(const std::vector<std::string>& d, const std::string& p) const {
  std::vector<bool> in_d(elems_.size(), false);
  for (const auto& id : d) in_d[index_of(id)] = true;
  return is_dense_below_i(in_d, index_of(p));
}

bool Poset::is_antichain(const std::vector<std::string>& xs) const {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (compatible(xs[i], xs[j])) return false;
  return true;
}

bool Poset::is_maximal_antichain(const std::vector<std::string>& xs) const {
  if (!is_antichain(xs)) return false;
  for (const auto& e : elems_) {
    bool compat = false;
    for (const auto& x : xs)
      if (compatible(e, x)) {
        compat = true;
        break;
      }
    if (!compat) return false;
  }
  return true;
}

std::vector<std::vector<std::string>> Poset::maximal_antichains(std::size_t budget) const {
  const std::size_t n = elems_.size();
  if (n >= 8 * sizeof(std::size_t) - 1 || (std::size_t{1} << n) > budget)
    fail_budget("antichain enumeration exceeds the size budget");
  std::vector<std::vector<std::string>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::string> xs;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) xs.push_back(elems_[i]);
    if (!xs.empty() && is_maximal_antichain(xs)) out.push_back(std::move(xs));
  }
  return out;
}

Filter::Filter(std::vector<std::string> ms) : members(std::move(ms)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool Filter::contains(const std::string& id) const {
  return std::binary_search(members.begin(), members.end(), id);
}

bool is_filter(const Poset& p, const Filter& f) {
  if (!f.contains(p.top())) return false;
  for (const auto& a : f.members) {
    if (!p.has_element(a)) return false;
    for (const auto& e : p.elements())
      if (p.leq(a, e) && !f.contains(e)) return false;  // upward closure
    for (const auto& b : f.members) {
      bool bounded = false;
      for (const auto& c : f.members)
        if (p.leq(c, a) && p.leq(c, b)) {
          bounded = true;
          break;
        }
      if (!bounded) return false;  // directedness
    }
  }
  return true;
}

bool meets_all_dense(const Poset& p, const Filter& f, std::size_t budget) {
  const std::size_t n = p.size();
  if (n >= 8 * sizeof(std::size_t) - 1 || (std::size_t{1} << n) > budget)
    fail_budget("dense-set enumeration exceeds the size budget");
  std::vector<bool> in_f(n, false);
  for (const auto& id : f.members) in_f[p.index_of(id)] = true;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<bool> in_d(n, false);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) in_d[i] = true;
    if (!p.is_dense_below_i(in_d, p.top_index())) continue;
    bool met = false;
    for (std::size_t i = 0; i < n && !met; ++i)
      if (in_d[i] && in_f[i]) met = true;
    if (!met) return false;
  }
  return true;
}

std::vector<Filter> generic_filters(const Poset& p) {
  std::vector<Filter> out;
  for (int a : p.atom_indices()) {
    std::vector<std::string> ms;
    for (const auto& e : p.elements())
      if (p.leq(p.id_of(a), e)) ms.push_back(e);
    out.push_back(Filter(std::move(ms)));
  }
  return out;
}

Poset fn_poset(const std::vector<std::string>& domain, std::size_t budget) {
  std::vector<std::string> vars = domain;
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  std::size_t count = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    count *= 3;
    if (count > budget) fail_budget("fn poset exceeds the size budget");
  }
  // Each variable is unset (0), mapped to 0 (1), or mapped to 1 (2).
  std::vector<std::string> elems;
  std::vector<std::vector<int>> states;
  std::vector<int> state(vars.size(), 0);
  for (std::size_t code = 0; code < count; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      state[i] = static_cast<int>(c % 3);
      c /= 3;
    }
    std::string id = "{";
    bool first = true;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (state[i] == 0) continue;
      if (!first) id += ',';
      first = false;
      id += vars[i] + ":" + (state[i] == 1 ? "0" : "1");
    }
    id += "}";
    elems.push_back(std::move(id));
    states.push_back(state);
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = 0; j < states.size(); ++j) {
      bool extends = true;  // f <= g iff f extends g as a partial function
      for (std::size_t v = 0; v < vars.size() && extends; ++v)
        if (states[j][v] != 0 && states[i][v] != states[j][v]) extends = false;
      if (extends) pairs.emplace_back(elems[i], elems[j]);
    }
  return Poset::make(std::move(elems), pairs, "{}");
}

}  // namespace urforce
