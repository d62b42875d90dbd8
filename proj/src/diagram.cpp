#include "urforce/diagram.hpp"

namespace urforce {

const std::vector<DiagramEdge>& hierarchy_edges() {
  static const std::vector<DiagramEdge> edges = {
      {"A is a set", "Tail", "Def. 2.5, following remark"},
      {"A is a set", "DC_<Ord-scheme", "Thm. 2.17(1)"},
      {"Plenitude", "Closure and Duplication", "Thm. 2.12(2)"},
      {"Plenitude", "DC_<Ord-scheme", "Thm. 2.11"},
      {"Closure and Duplication", "Collection", "Thm. 2.12(1)"},
      {"Closure and Duplication", "Duplication", "immediate"},
      {"Tail", "Collection", "Thm. 2.13"},
      {"DC_<Ord-scheme", "Collection", "Thm. 2.17(2)"},
      {"DC_omega1-scheme", "DC_omega-scheme", "DC_kappa-scheme chain, immediate"},
      {"Collection", "Closure", "Thm. 2.17(4)"},
      {"Collection", "DC_omega-scheme", "Thm. 2.17(6)"},
      {"Collection", "RP", "Thm. 2.17(7)"},
      {"RP", "RP-", "immediate"},
      {"RP-", "Collection", "Thm. 2.17(3), Cor. 2.18"},
  };
  return edges;
}

std::string diagram_dot() {
  std::string out = "digraph axioms {\n";
  for (const auto& e : hierarchy_edges())
    out += "  \"" + e.from + "\" -> \"" + e.to + "\" [label=\"" + e.citation + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace urforce
