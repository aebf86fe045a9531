#include "sbgg/render.hpp"

#include "sbgg/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <functional>
#include <map>

namespace sbgg {

namespace {

template <class Find>
std::vector<std::vector<VertexId>> triangular(std::vector<int> pool, Find&& find) {
  std::sort(pool.begin(), pool.end(), std::greater<>{});
  std::vector<std::vector<VertexId>> rows;
  for (std::size_t i = 1; i < pool.size(); ++i) {
    std::vector<VertexId> row;
    for (std::size_t j = i; j < pool.size(); ++j) {
      std::vector<int> head{pool[i - 1], pool[j]};
      std::vector<int> tail;
      for (std::size_t t = 0; t < pool.size(); ++t)
        if (t != i - 1 && t != j)
          tail.push_back(pool[t]);
      auto id = find(head, tail);
      if (!id)
        throw invariant_violation(fmt::format("grid cell ({}, {}) has no vertex", i, j));
      row.push_back(*id);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\')
      out += '\\';
    out += ch;
  }
  return out;
}

std::string direction_name(int r) { return fmt::format("dir {}", r); }

std::string relative_listing(const RelativeDiagram& d, const std::vector<Label>* labels) {
  std::string out;
  for (int p = 0; p <= d.max_degree(); ++p) {
    std::vector<std::string> items;
    for (VertexId id = 0; id < d.vertices.size(); ++id) {
      if (d.vertices[id].p != p)
        continue;
      std::string item = d.vertices[id].to_string();
      if (labels)
        item += ":" + (*labels)[id].to_string();
      items.push_back(std::move(item));
    }
    out += fmt::format("p={}: {}\n", p, fmt::join(items, " "));
  }
  return out;
}

std::string label_block(const LabeledDiagram& d) {
  if (auto layout = grid_layout(d.diagram)) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : *layout) {
      std::vector<std::string> text;
      for (VertexId id : row)
        text.push_back(d.labels[id].to_string());
      cells.push_back(std::move(text));
    }
    return format_grid(cells);
  }
  return relative_listing(d.diagram, &d.labels);
}

} // namespace

std::optional<std::vector<std::vector<VertexId>>> grid_layout(const RelativeDiagram& d) {
  if (d.profile.a() != 2 || d.vertices.empty())
    return std::nullopt;
  const auto& start = d.vertices[d.start];
  std::vector<int> pool = start.g2;
  pool.insert(pool.end(), start.g3.begin(), start.g3.end());
  return triangular(std::move(pool), [&](const std::vector<int>& g2, const std::vector<int>& g3) {
    return d.find(g2, g3);
  });
}

std::optional<std::vector<std::vector<VertexId>>> grid_layout(const RegularDiagram& d) {
  if (d.k != 2)
    return std::nullopt;
  return triangular(d.values, [&](const std::vector<int>& first, const std::vector<int>& second) {
    return d.find({first, second});
  });
}

std::string format_grid(const std::vector<std::vector<std::string>>& cells) {
  std::size_t width = 1;
  for (const auto& row : cells)
    for (const auto& cell : row)
      width = std::max(width, cell.size());

  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::string line(i * (width + 1), ' ');
    for (std::size_t j = 0; j < cells[i].size(); ++j) {
      if (j > 0)
        line += ' ';
      line += fmt::format("{:>{}}", cells[i][j], width);
    }
    while (!line.empty() && line.back() == ' ')
      line.pop_back();
    out += line + '\n';
  }
  return out;
}

std::string render_ascii(const RelativeDiagram& d) {
  std::string out;
  if (auto layout = grid_layout(d)) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : *layout) {
      std::vector<std::string> text;
      for (VertexId id : row)
        text.push_back(d.vertices[id].to_string());
      cells.push_back(std::move(text));
    }
    out += format_grid(cells);
  } else {
    out += relative_listing(d, nullptr);
  }
  out += fmt::format("vertices: {}  arrows: {}\n", d.vertices.size(), d.arrows.size());
  for (const auto& a : d.arrows)
    out += fmt::format("{} -> {}  {}\n", d.vertices[a.src].to_string(), d.vertices[a.dst].to_string(),
                       direction_name(a.direction));
  return out;
}

std::string render_ascii(const RegularDiagram& d) {
  std::string out;
  if (auto layout = grid_layout(d)) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : *layout) {
      std::vector<std::string> text;
      for (VertexId id : row)
        text.push_back(d.vertices[id].weight.to_string());
      cells.push_back(std::move(text));
    }
    out += format_grid(cells);
  } else {
    for (int deg = 0; deg <= d.max_degree(); ++deg) {
      std::vector<std::string> items;
      for (const auto& v : d.vertices)
        if (v.degree == deg)
          items.push_back(v.weight.to_string());
      out += fmt::format("degree {}: {}\n", deg, fmt::join(items, " "));
    }
  }
  out += fmt::format("vertices: {}  arrows: {}\n", d.vertices.size(), d.arrows.size());
  for (const auto& a : d.arrows)
    out += fmt::format("{} -> {}  {}\n", d.vertices[a.src].weight.to_string(), d.vertices[a.dst].weight.to_string(),
                       direction_name(a.direction));
  return out;
}

std::string render_ascii(const LabeledDiagram& d) { return label_block(d); }

std::string render_ascii(const SingularComplex& c, const LabeledDiagram& labeled) {
  const auto& rel = labeled.diagram.vertices;
  std::string out = label_block(labeled);
  out += "chain spaces:\n";
  for (std::size_t s = 0; s < c.chain_spaces.size(); ++s) {
    std::vector<std::string> items;
    for (VertexId id : c.chain_spaces[s])
      items.push_back(c.vertices[id].pushed_weight.to_string());
    out += fmt::format("C_{}: {}\n", s, fmt::join(items, " "));
  }
  out += fmt::format("arrows: {}\n", c.arrows.size());
  for (const auto& a : c.arrows) {
    out += fmt::format("{} -> {}  {}  steps {}  order {}  {}\n", rel[c.vertices[a.src].base].to_string(),
                       rel[c.vertices[a.dst].base].to_string(), direction_name(a.direction), a.steps, a.order,
                       a.standard ? "standard" : "nonstandard");
  }
  return out;
}

std::string render_dot(const RelativeDiagram& d) {
  std::string out = "digraph relative {\n  rankdir=LR;\n  node [shape=box];\n";
  for (VertexId id = 0; id < d.vertices.size(); ++id)
    out += fmt::format("  v{} [label=\"{}\"];\n", id, dot_escape(d.vertices[id].to_string()));
  for (const auto& a : d.arrows)
    out += fmt::format("  v{} -> v{} [label=\"{}\"];\n", a.src, a.dst, a.direction);
  out += "}\n";
  return out;
}

std::string render_dot(const RegularDiagram& d) {
  std::string out = "digraph regular {\n  rankdir=LR;\n  node [shape=box];\n";
  for (VertexId id = 0; id < d.vertices.size(); ++id)
    out += fmt::format("  v{} [label=\"{}\"];\n", id, dot_escape(d.vertices[id].weight.to_string()));
  for (const auto& a : d.arrows)
    out += fmt::format("  v{} -> v{} [label=\"{}\"];\n", a.src, a.dst, a.direction);
  out += "}\n";
  return out;
}

namespace {

std::string labeled_nodes(const LabeledDiagram& d) {
  std::string out;
  for (VertexId id = 0; id < d.diagram.vertices.size(); ++id) {
    const auto text = dot_escape(d.diagram.vertices[id].to_string() + " : " + d.labels[id].to_string());
    out += fmt::format("  v{} [label=\"{}\"{}];\n", id, text, d.labels[id].vanishes() ? ", style=dashed" : "");
  }
  return out;
}

std::string jump_edges(const SingularComplex& c) {
  std::string out;
  for (const auto& a : c.arrows)
    out += fmt::format("  v{} -> v{} [label=\"d{}/ord {}\"{}];\n", c.vertices[a.src].base, c.vertices[a.dst].base,
                       a.steps, a.order, a.standard ? "" : ", style=bold");
  return out;
}

} // namespace

std::string render_dot(const LabeledDiagram& d) {
  std::string out = "digraph relative {\n  rankdir=LR;\n  node [shape=box];\n";
  out += labeled_nodes(d);
  for (const auto& a : d.diagram.arrows)
    out += fmt::format("  v{} -> v{} [label=\"{}\"];\n", a.src, a.dst, a.direction);
  out += "}\n";
  return out;
}

std::string render_dot(const SingularComplex& c, const LabeledDiagram& labeled) {
  const auto& rel = labeled.diagram.vertices;
  std::string out = "digraph complex {\n  rankdir=LR;\n  node [shape=box];\n";
  for (const auto& v : c.vertices)
    out += fmt::format("  v{} [label=\"{} : {}\"];\n", v.base, dot_escape(rel[v.base].to_string()), v.q);
  out += jump_edges(c);
  out += "}\n";
  return out;
}

std::string render_dot_overlay(const SingularComplex& c, const LabeledDiagram& labeled) {
  std::string out = "digraph overlay {\n  rankdir=LR;\n  node [shape=box];\n";
  out += labeled_nodes(labeled);
  for (const auto& a : labeled.diagram.arrows)
    out += fmt::format("  v{} -> v{} [color=gray];\n", a.src, a.dst);
  out += jump_edges(c);
  out += "}\n";
  return out;
}

} // namespace sbgg
