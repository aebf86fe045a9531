#include "sbgg/bbw.hpp"

#include <algorithm>
#include <functional>

namespace sbgg {

std::string Label::to_string() const { return q ? std::to_string(*q) : std::string("x"); }

Label label_vertex(const RelativeVertex& v) {
  std::vector<int> head = v.g1;
  head.insert(head.end(), v.g2.begin(), v.g2.end());

  std::vector<int> sorted = head;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return vanishing_label;
  return Label{descending_inversions(head)};
}

std::size_t LabeledDiagram::numeric_count() const {
  return static_cast<std::size_t>(
      std::count_if(labels.begin(), labels.end(), [](const Label& l) { return !l.vanishes(); }));
}

LabeledDiagram label_diagram(RelativeDiagram d) {
  LabeledDiagram out;
  out.labels.reserve(d.vertices.size());
  for (const auto& v : d.vertices)
    out.labels.push_back(label_vertex(v));
  out.diagram = std::move(d);
  return out;
}

} // namespace sbgg
