#include "urforce/name.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace urforce {

struct PName::Node {
  std::vector<Entry> entries;
  std::string repr;
  std::vector<std::string> kernel;
  int rank = 0;
};

namespace {

std::shared_ptr<const PName::Node> empty_pname_node() {
  static const auto node = [] {
    auto n = std::make_shared<PName::Node>();
    n->repr = "{\"pname\":[]}";
    return n;
  }();
  return node;
}

}  // namespace

std::string PName::Entry::entry_repr() const {
  return is_ur ? "{\"ur\":" + json_quote(ur) + "}" : sub.repr();
}

PName::PName() : node_(empty_pname_node()) {}

PName PName::make(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    const std::string ra = a.entry_repr(), rb = b.entry_repr();
    return ra != rb ? ra < rb : a.cond < b.cond;
  });
  entries.erase(std::unique(entries.begin(), entries.end(),
                            [](const Entry& a, const Entry& b) {
                              return a.cond == b.cond && a.entry_repr() == b.entry_repr();
                            }),
                entries.end());
  auto n = std::make_shared<Node>();
  std::string repr = "{\"pname\":[";
  int rank = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) repr += ',';
    repr += "[" + entries[i].entry_repr() + "," + json_quote(entries[i].cond) + "]";
    if (entries[i].is_ur) {
      n->kernel.push_back(entries[i].ur);
    } else {
      rank = std::max(rank, entries[i].sub.rank() + 1);
      const auto& k = entries[i].sub.kernel();
      n->kernel.insert(n->kernel.end(), k.begin(), k.end());
    }
  }
  repr += "]}";
  std::sort(n->kernel.begin(), n->kernel.end());
  n->kernel.erase(std::unique(n->kernel.begin(), n->kernel.end()), n->kernel.end());
  n->repr = std::move(repr);
  n->rank = rank;
  n->entries = std::move(entries);
  return PName(std::move(n));
}

PName PName::ur_entry(const std::string& ur, const std::string& cond) {
  Entry e;
  e.is_ur = true;
  e.ur = ur;
  e.cond = cond;
  return make({std::move(e)});
}

const std::vector<PName::Entry>& PName::entries() const { return node_->entries; }
bool PName::empty() const { return node_->entries.empty(); }
const std::string& PName::repr() const { return node_->repr; }
int PName::rank() const { return node_->rank; }
const std::vector<std::string>& PName::kernel() const { return node_->kernel; }

struct LegacyName::Node {
  bool is_ur = false;
  std::string ur;
  std::vector<Entry> entries;
  std::string repr;
  int rank = 0;
};

namespace {

std::shared_ptr<const LegacyName::Node> empty_lname_node() {
  static const auto node = [] {
    auto n = std::make_shared<LegacyName::Node>();
    n->repr = "{\"lname\":[]}";
    return n;
  }();
  return node;
}

}  // namespace

LegacyName::LegacyName() : node_(empty_lname_node()) {}

LegacyName LegacyName::urelement(std::string id) {
  auto n = std::make_shared<Node>();
  n->is_ur = true;
  n->repr = "{\"ur\":" + json_quote(id) + "}";
  n->ur = std::move(id);
  return LegacyName(std::move(n));
}

LegacyName LegacyName::set(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.sub.repr() != b.sub.repr() ? a.sub.repr() < b.sub.repr() : a.cond < b.cond;
  });
  entries.erase(std::unique(entries.begin(), entries.end(),
                            [](const Entry& a, const Entry& b) {
                              return a.cond == b.cond && a.sub == b.sub;
                            }),
                entries.end());
  auto n = std::make_shared<Node>();
  std::string repr = "{\"lname\":[";
  int rank = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) repr += ',';
    repr += "[" + entries[i].sub.repr() + "," + json_quote(entries[i].cond) + "]";
    rank = std::max(rank, entries[i].sub.rank() + 1);
  }
  repr += "]}";
  n->repr = std::move(repr);
  n->rank = rank;
  n->entries = std::move(entries);
  return LegacyName(std::move(n));
}

bool LegacyName::is_urelement() const { return node_->is_ur; }

const std::string& LegacyName::ur_id() const {
  if (!node_->is_ur) fail_invalid("ur_id on a set-shaped legacy name");
  return node_->ur;
}

const std::vector<LegacyName::Entry>& LegacyName::entries() const {
  if (node_->is_ur) fail_invalid("entries of a urelement legacy name");
  return node_->entries;
}

const std::string& LegacyName::repr() const { return node_->repr; }
int LegacyName::rank() const { return node_->rank; }

std::vector<std::string> LegacyName::kernel() const {
  if (node_->is_ur) return {node_->ur};
  std::vector<std::string> out;
  for (const auto& e : node_->entries) {
    auto k = e.sub.kernel();
    out.insert(out.end(), k.begin(), k.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

bool check_validity(const Poset& p, const PName& n, ValidityReport& report) {
  const auto& es = n.entries();
  for (const auto& e : es) {
    if (!p.has_element(e.cond)) {
      report.ok = false;
      report.violation = {n.repr(), e.entry_repr(), "unknown condition " + e.cond};
      return false;
    }
  }
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (!es[i].is_ur) continue;
    for (std::size_t j = 0; j < es.size(); ++j) {
      if (i == j) continue;
      const bool same_entry = es[j].is_ur && es[j].ur == es[i].ur;
      if (same_entry) continue;
      if (p.compatible(es[i].cond, es[j].cond)) {
        report.ok = false;
        report.violation = {n.repr(), es[i].entry_repr() + "@" + es[i].cond,
                            es[j].entry_repr() + "@" + es[j].cond};
        return false;
      }
    }
  }
  for (const auto& e : es)
    if (!e.is_ur && !check_validity(p, e.sub, report)) return false;
  return true;
}

}  // namespace

ValidityReport is_valid_name(const Poset& p, const PName& n) {
  ValidityReport report;
  check_validity(p, n, report);
  return report;
}

PName check_name(const Poset& p, const HfuValue& v) {
  if (v.is_urelement()) return PName::ur_entry(v.ur_id(), p.top());
  std::vector<PName::Entry> es;
  for (const auto& m : v.members()) {
    PName::Entry e;
    e.is_ur = false;
    e.sub = check_name(p, m);
    e.cond = p.top();
    es.push_back(std::move(e));
  }
  return PName::make(std::move(es));
}

std::optional<HfuValue> decode_check_name(const Poset& p, const PName& n) {
  const auto& es = n.entries();
  bool has_ur = false;
  for (const auto& e : es) has_ur = has_ur || e.is_ur;
  if (has_ur) {
    if (es.size() == 1 && es[0].is_ur && es[0].cond == p.top())
      return HfuValue::urelement(es[0].ur);
    return std::nullopt;
  }
  std::vector<HfuValue> members;
  for (const auto& e : es) {
    if (e.cond != p.top()) return std::nullopt;
    auto sub = decode_check_name(p, e.sub);
    if (!sub) return std::nullopt;
    members.push_back(*sub);
  }
  return HfuValue::set(std::move(members));
}

HfuValue valuate(const Poset& p, const PName& n, const Filter& g) {
  std::vector<std::string> fired;
  for (const auto& e : n.entries()) {
    p.index_of(e.cond);
    if (e.is_ur && g.contains(e.cond)) fired.push_back(e.ur);
  }
  std::sort(fired.begin(), fired.end());
  fired.erase(std::unique(fired.begin(), fired.end()), fired.end());
  if (fired.size() > 1)
    fail_invalid("malformed name: distinct urelement entries fire under the same filter");
  if (fired.size() == 1) return HfuValue::urelement(fired[0]);
  std::vector<HfuValue> members;
  for (const auto& e : n.entries())
    if (!e.is_ur && g.contains(e.cond)) members.push_back(valuate(p, e.sub, g));
  return HfuValue::set(std::move(members));
}

HfuValue legacy_valuate(const Poset& p, const LegacyName& n, const Filter& g) {
  if (n.is_urelement()) return HfuValue::urelement(n.ur_id());
  std::vector<HfuValue> members;
  for (const auto& e : n.entries()) {
    p.index_of(e.cond);
    if (g.contains(e.cond)) members.push_back(legacy_valuate(p, e.sub, g));
  }
  return HfuValue::set(std::move(members));
}

PName mix(const Poset& p, const std::vector<std::pair<std::string, PName>>& f) {
  std::vector<std::string> dom;
  for (const auto& [q, name] : f) {
    dom.push_back(q);
    auto report = is_valid_name(p, name);
    if (!report.ok) fail_invalid("mixture input is not a valid name: " + name.repr());
  }
  std::sort(dom.begin(), dom.end());
  if (std::unique(dom.begin(), dom.end()) != dom.end())
    fail_invalid("mixture domain repeats a condition");
  if (!p.is_antichain(dom)) fail_invalid("mixture domain is not an antichain");
  std::vector<PName::Entry> es;
  for (const auto& [q, name] : f) {
    const int qi = p.index_of(q);
    for (const auto& e : name.entries()) {
      const int ci = p.index_of(e.cond);
      for (int r = 0; r < static_cast<int>(p.size()); ++r) {
        if (!p.leq_i(r, qi) || !p.leq_i(r, ci)) continue;
        PName::Entry out = e;
        out.cond = p.id_of(r);
        es.push_back(std::move(out));
      }
    }
  }
  PName v = PName::make(std::move(es));
  auto report = is_valid_name(p, v);
  if (!report.ok) fail_invalid("mixture produced an invalid name");  // cannot happen
  return v;
}

PName purify(const Poset& p, const PName& n, const std::vector<std::string>& keep) {
  std::vector<PName::Entry> es;
  for (const auto& e : n.entries()) {
    if (e.is_ur) {
      if (std::find(keep.begin(), keep.end(), e.ur) != keep.end()) es.push_back(e);
    } else {
      PName::Entry out = e;
      out.sub = purify(p, e.sub, keep);
      es.push_back(std::move(out));
    }
  }
  return PName::make(std::move(es));
}

PName set_counterpart(const Poset& p, const PName& n) {
  std::vector<PName::Entry> es;
  for (const auto& e : n.entries()) {
    if (e.is_ur) continue;  // urelement entries at this level contribute nothing
    const int pi = p.index_of(e.cond);
    const PName& y = e.sub;
    for (int s = 0; s < static_cast<int>(p.size()); ++s) {
      if (!p.leq_i(s, pi)) continue;
      bool avoids_ur = true;
      for (const auto& ye : y.entries())
        if (ye.is_ur && p.compatible_i(s, p.index_of(ye.cond))) {
          avoids_ur = false;
          break;
        }
      if (avoids_ur) {
        PName::Entry out;
        out.is_ur = false;
        out.sub = set_counterpart(p, y);
        out.cond = p.id_of(s);
        es.push_back(std::move(out));
      }
    }
    for (const auto& ye : y.entries()) {
      if (!ye.is_ur) continue;
      const int ri = p.index_of(ye.cond);
      for (int s = 0; s < static_cast<int>(p.size()); ++s) {
        if (!p.leq_i(s, pi) || !p.leq_i(s, ri)) continue;
        PName::Entry out;
        out.is_ur = false;
        out.sub = check_name(p, HfuValue::urelement(ye.ur));
        out.cond = p.id_of(s);
        es.push_back(std::move(out));
      }
    }
  }
  return PName::make(std::move(es));
}

PName embed_j(const Poset& p, const LegacyName& n) {
  if (n.is_urelement()) return PName::ur_entry(n.ur_id(), p.top());
  std::vector<PName::Entry> es;
  for (const auto& e : n.entries()) {
    PName::Entry out;
    out.is_ur = false;
    out.sub = embed_j(p, e.sub);
    out.cond = e.cond;
    es.push_back(std::move(out));
  }
  return PName::make(std::move(es));
}

std::optional<LegacyName> j_preimage(const Poset& p, const PName& n) {
  const auto& es = n.entries();
  bool has_ur = false;
  for (const auto& e : es) has_ur = has_ur || e.is_ur;
  if (has_ur) {
    if (es.size() == 1 && es[0].is_ur && es[0].cond == p.top())
      return LegacyName::urelement(es[0].ur);
    return std::nullopt;
  }
  std::vector<LegacyName::Entry> out;
  for (const auto& e : es) {
    auto sub = j_preimage(p, e.sub);
    if (!sub) return std::nullopt;
    out.push_back({*sub, e.cond});
  }
  return LegacyName::set(std::move(out));
}

PName act(const Automorphism& pi, const PName& n) {
  if (pi.is_identity()) return n;
  std::vector<PName::Entry> es;
  for (const auto& e : n.entries()) {
    PName::Entry out = e;
    if (e.is_ur)
      out.ur = pi.apply(e.ur);
    else
      out.sub = act(pi, e.sub);
    es.push_back(std::move(out));
  }
  return PName::make(std::move(es));
}

HfuValue condition_value(const Poset& p, const std::string& id) {
  return nat_value(p.index_of(id));
}

PName gamma_name(const Poset& p) {
  std::vector<PName::Entry> es;
  for (const auto& id : p.elements()) {
    PName::Entry e;
    e.is_ur = false;
    e.sub = check_name(p, condition_value(p, id));
    e.cond = id;
    es.push_back(std::move(e));
  }
  return PName::make(std::move(es));
}

std::vector<PName> subnames(const PName& n) {
  std::map<std::string, PName> acc;
  std::deque<PName> work{n};
  while (!work.empty()) {
    PName cur = work.front();
    work.pop_front();
    for (const auto& e : cur.entries()) {
      if (e.is_ur) continue;
      if (acc.emplace(e.sub.repr(), e.sub).second) work.push_back(e.sub);
    }
  }
  std::vector<PName> out;
  for (auto& [_, name] : acc) out.push_back(name);
  return out;
}

NamePool::NamePool(Poset p, std::vector<PName> names) : poset_(std::move(p)) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  for (const auto& n : names) reprs_.insert(n.repr());
  for (const auto& n : names) {
    auto report = is_valid_name(poset_, n);
    if (!report.ok) fail_invalid("pool contains an invalid name: " + n.repr());
    for (const auto& e : n.entries())
      if (!e.is_ur && !reprs_.count(e.sub.repr()))
        fail_invalid("pool is not subname-closed at " + e.sub.repr());
  }
  names_ = std::move(names);
}

NamePool close_pool(const Poset& p, const std::vector<PName>& seeds, std::size_t budget) {
  std::map<std::string, PName> acc;
  std::deque<PName> work;
  for (const auto& s : seeds) {
    auto report = is_valid_name(p, s);
    if (!report.ok) fail_invalid("pool seed is not a valid name: " + s.repr());
    if (acc.emplace(s.repr(), s).second) work.push_back(s);
  }
  std::set<std::string> urs;
  while (!work.empty()) {
    PName cur = work.front();
    work.pop_front();
    if (acc.size() > budget) fail_budget("pool closure exceeds the size budget");
    for (const auto& u : cur.kernel()) urs.insert(u);
    for (const auto& e : cur.entries()) {
      if (e.is_ur) continue;
      if (acc.emplace(e.sub.repr(), e.sub).second) work.push_back(e.sub);
    }
  }
  for (const auto& u : urs) {
    PName chk = check_name(p, HfuValue::urelement(u));
    acc.emplace(chk.repr(), chk);
  }
  std::vector<PName> names;
  for (auto& [_, n] : acc) names.push_back(n);
  return NamePool(p, std::move(names));
}

std::vector<LegacyName> legacy_subclosure(const std::vector<LegacyName>& seeds) {
  std::map<std::string, LegacyName> acc;
  std::deque<LegacyName> work;
  for (const auto& s : seeds)
    if (acc.emplace(s.repr(), s).second) work.push_back(s);
  while (!work.empty()) {
    LegacyName cur = work.front();
    work.pop_front();
    if (cur.is_urelement()) continue;
    for (const auto& e : cur.entries())
      if (acc.emplace(e.sub.repr(), e.sub).second) work.push_back(e.sub);
  }
  std::vector<LegacyName> out;
  for (auto& [_, n] : acc) out.push_back(n);
  return out;
}

}  // namespace urforce
