#pragma once

#include <string>
#include <vector>

namespace urforce {

// One direct implication between axioms of urelement set theory, with the
// literature citation backing it.
struct DiagramEdge {
  std::string from;
  std::string to;
  std::string citation;

  bool operator==(const DiagramEdge& o) const {
    return from == o.from && to == o.to && citation == o.citation;
  }
};

// The static implication diagram: fourteen direct edges. Data only, since
// none of these implications is checkable at finite scale.
const std::vector<DiagramEdge>& hierarchy_edges();

std::string diagram_dot();

}  // namespace urforce
