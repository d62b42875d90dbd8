#include "urforce/value.hpp"

#include <algorithm>

namespace urforce {

struct HfuValue::Node {
  bool is_ur = false;
  std::string ur;
  std::vector<HfuValue> members;
  std::string repr;
  std::vector<std::string> kernel;
  int rank = 0;
};

namespace {

std::shared_ptr<const HfuValue::Node> empty_set_node() {
  static const auto node = [] {
    auto n = std::make_shared<HfuValue::Node>();
    n->repr = "{\"set\":[]}";
    return n;
  }();
  return node;
}

}  // namespace

std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

HfuValue::HfuValue() : node_(empty_set_node()) {}

HfuValue HfuValue::urelement(std::string id) {
  auto n = std::make_shared<Node>();
  n->is_ur = true;
  n->ur = id;
  n->repr = "{\"ur\":" + json_quote(id) + "}";
  n->kernel = {std::move(id)};
  n->rank = 0;
  return HfuValue(std::move(n));
}

HfuValue HfuValue::set(std::vector<HfuValue> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end(),
                            [](const HfuValue& a, const HfuValue& b) { return a == b; }),
                members.end());
  auto n = std::make_shared<Node>();
  n->is_ur = false;
  std::string repr = "{\"set\":[";
  int rank = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) repr += ',';
    repr += members[i].repr();
    rank = std::max(rank, members[i].rank() + 1);
    const auto& k = members[i].kernel();
    n->kernel.insert(n->kernel.end(), k.begin(), k.end());
  }
  repr += "]}";
  std::sort(n->kernel.begin(), n->kernel.end());
  n->kernel.erase(std::unique(n->kernel.begin(), n->kernel.end()), n->kernel.end());
  n->repr = std::move(repr);
  n->rank = rank;
  n->members = std::move(members);
  return HfuValue(std::move(n));
}

bool HfuValue::is_urelement() const { return node_->is_ur; }

const std::string& HfuValue::ur_id() const {
  if (!node_->is_ur) fail_invalid("ur_id on a set value");
  return node_->ur;
}

const std::vector<HfuValue>& HfuValue::members() const {
  if (node_->is_ur) fail_invalid("members of a urelement");
  return node_->members;
}

bool HfuValue::is_empty_set() const { return !node_->is_ur && node_->members.empty(); }

const std::string& HfuValue::repr() const { return node_->repr; }

const std::vector<std::string>& HfuValue::kernel() const { return node_->kernel; }

int HfuValue::rank() const { return node_->rank; }

bool HfuValue::has_member(const HfuValue& m) const {
  if (node_->is_ur) return false;
  return std::binary_search(node_->members.begin(), node_->members.end(), m);
}

bool value_in(const HfuValue& v, const HfuValue& w) { return w.has_member(v); }

bool value_subset(const HfuValue& v, const HfuValue& w) {
  if (v.is_urelement()) return true;  // no members, vacuous
  for (const auto& m : v.members())
    if (!value_in(m, w)) return false;
  return true;
}

bool value_aeq(const HfuValue& v, const HfuValue& w) {
  if (v.is_urelement() || w.is_urelement())
    return v.is_urelement() && w.is_urelement() && v.ur_id() == w.ur_id();
  return true;
}

std::vector<HfuValue> transitive_closure(const HfuValue& v) {
  std::vector<HfuValue> out;
  std::vector<HfuValue> work;
  if (!v.is_urelement()) work = v.members();
  while (!work.empty()) {
    HfuValue cur = work.back();
    work.pop_back();
    if (std::binary_search(out.begin(), out.end(), cur)) continue;
    out.insert(std::lower_bound(out.begin(), out.end(), cur), cur);
    if (!cur.is_urelement())
      for (const auto& m : cur.members()) work.push_back(m);
  }
  return out;
}

HfuValue nat_value(int k) {
  HfuValue v;  // 0
  std::vector<HfuValue> acc;
  for (int i = 0; i < k; ++i) {
    acc.push_back(v);
    v = HfuValue::set(acc);
  }
  return v;
}

std::vector<HfuValue> build_v(int alpha, const std::vector<std::string>& urs,
                              std::size_t budget) {
  std::vector<HfuValue> stage;
  for (const auto& u : urs) stage.push_back(HfuValue::urelement(u));
  std::sort(stage.begin(), stage.end());
  stage.erase(std::unique(stage.begin(), stage.end()), stage.end());
  for (int step = 0; step < alpha; ++step) {
    if (stage.size() >= 8 * sizeof(std::size_t) - 1 ||
        (std::size_t{1} << stage.size()) > budget)
      fail_budget("powerset stage would exceed the size budget");
    std::vector<HfuValue> next;
    const std::size_t n = stage.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<HfuValue> members;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) members.push_back(stage[i]);
      next.push_back(HfuValue::set(std::move(members)));
    }
    for (const auto& u : urs) next.push_back(HfuValue::urelement(u));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.size() > budget) fail_budget("hierarchy stage exceeds the size budget");
    stage = std::move(next);
  }
  return stage;
}

Automorphism Automorphism::swap_pair(const std::string& a, const std::string& b) {
  Automorphism pi;
  if (a != b) {
    pi.map_[a] = b;
    pi.map_[b] = a;
  }
  return pi;
}

Automorphism Automorphism::from_map(std::map<std::string, std::string> mapping) {
  for (auto it = mapping.begin(); it != mapping.end();) {
    if (it->first == it->second)
      it = mapping.erase(it);
    else
      ++it;
  }
  std::vector<std::string> dom, img;
  for (const auto& [k, v] : mapping) {
    dom.push_back(k);
    img.push_back(v);
  }
  std::sort(img.begin(), img.end());
  if (std::unique(img.begin(), img.end()) != img.end() || dom != img)
    fail_invalid("mapping is not a permutation of its support");
  Automorphism pi;
  pi.map_ = std::move(mapping);
  return pi;
}

const std::string& Automorphism::apply(const std::string& id) const {
  auto it = map_.find(id);
  return it == map_.end() ? id : it->second;
}

HfuValue Automorphism::apply(const HfuValue& v) const {
  if (map_.empty()) return v;
  if (v.is_urelement()) return HfuValue::urelement(apply(v.ur_id()));
  std::vector<HfuValue> members;
  members.reserve(v.members().size());
  for (const auto& m : v.members()) members.push_back(apply(m));
  return HfuValue::set(std::move(members));
}

Automorphism Automorphism::then(const Automorphism& g) const {
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : map_) out[k] = g.apply(v);
  for (const auto& [k, v] : g.map_)
    if (!map_.count(k)) out[k] = v;
  return from_map(std::move(out));
}

Automorphism Automorphism::inverse() const {
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : map_) out[v] = k;
  Automorphism pi;
  pi.map_ = std::move(out);
  return pi;
}

}  // namespace urforce
