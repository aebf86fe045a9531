#pragma once

#include "sbgg/hasse.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sbgg {

/// Direct-image label of a relative vertex: either every direct image
/// vanishes, or exactly one cohomology degree q survives.
struct Label {
  std::optional<int> q;

  bool vanishes() const noexcept { return !q.has_value(); }
  /// "x" or the degree.
  std::string to_string() const;

  friend bool operator==(const Label&, const Label&) = default;
};

inline constexpr Label vanishing_label{};

Label label_vertex(const RelativeVertex& v);

struct LabeledDiagram {
  RelativeDiagram diagram;
  std::vector<Label> labels; // indexed by vertex id

  const SingularityProfile& profile() const noexcept { return diagram.profile; }
  std::size_t numeric_count() const;

  friend bool operator==(const LabeledDiagram&, const LabeledDiagram&) = default;
};

LabeledDiagram label_diagram(RelativeDiagram d);

} // namespace sbgg
