#pragma once

#include "sbgg/bbw.hpp"
#include "sbgg/complex.hpp"
#include "sbgg/hasse.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sbgg {

/// Triangular grid layout for a two-row moving block. Cell (i, j), i <= j,
/// holds the vertex whose moving block is (v[i-1], v[j]), v being the
/// descending list of values shared by the two moving groups. Rows are
/// returned without the empty lower-left part.
std::optional<std::vector<std::vector<VertexId>>> grid_layout(const RelativeDiagram& d);
std::optional<std::vector<std::vector<VertexId>>> grid_layout(const RegularDiagram& d);

/// Upper-triangular text matrix; row i is indented by i cells.
std::string format_grid(const std::vector<std::vector<std::string>>& cells);

std::string render_ascii(const RelativeDiagram& d);
std::string render_ascii(const RegularDiagram& d);
/// Label grid when k - l == 2, otherwise a listing grouped by p.
std::string render_ascii(const LabeledDiagram& d);
/// Label grid or listing, then chain spaces and the arrow table.
std::string render_ascii(const SingularComplex& c, const LabeledDiagram& labeled);

std::string render_dot(const RelativeDiagram& d);
std::string render_dot(const RegularDiagram& d);
std::string render_dot(const LabeledDiagram& d);
std::string render_dot(const SingularComplex& c, const LabeledDiagram& labeled);
/// Relative diagram with the jump arrows of its complex overlaid.
std::string render_dot_overlay(const SingularComplex& c, const LabeledDiagram& labeled);

} // namespace sbgg
