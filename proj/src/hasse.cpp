#include "sbgg/hasse.hpp"

#include "sbgg/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <deque>
#include <functional>

namespace sbgg {

std::string RelativeVertex::to_string() const {
  if (g1.empty())
    return format_groups({g2, g3});
  return format_groups({g1, g2, g3});
}

std::vector<Exchange> exchange_successors(std::span<const int> head, std::span<const int> tail) {
  std::vector<Exchange> out;
  for (std::size_t r = 0; r < head.size(); ++r) {
    const int x = head[r];
    // tail is descending: the first entry below x is the largest one.
    auto it = std::find_if(tail.begin(), tail.end(), [x](int z) { return z < x; });
    if (it == tail.end())
      continue;
    const int y = *it;
    if (r + 1 < head.size() && y <= head[r + 1])
      continue;

    Exchange ex;
    ex.direction = static_cast<int>(r) + 1;
    ex.head.assign(head.begin(), head.end());
    ex.head[r] = y;
    ex.tail.assign(tail.begin(), tail.end());
    ex.tail[static_cast<std::size_t>(it - tail.begin())] = x;
    out.push_back(std::move(ex));
  }
  return out;
}

RelativeVertex start_vertex(const SingularityProfile& profile) {
  std::vector<int> pool = profile.I;
  pool.insert(pool.end(), profile.J.begin(), profile.J.end());
  std::sort(pool.begin(), pool.end(), std::greater<>{});

  RelativeVertex v;
  v.g1 = profile.I;
  const auto split = static_cast<std::ptrdiff_t>(profile.a());
  v.g2.assign(pool.begin(), pool.begin() + split);
  v.g3.assign(pool.begin() + split, pool.end());
  v.p = 0;
  return v;
}

std::vector<std::pair<int, RelativeVertex>> successors(const RelativeVertex& v) {
  std::vector<std::pair<int, RelativeVertex>> out;
  for (auto& ex : exchange_successors(v.g2, v.g3))
    out.emplace_back(ex.direction, RelativeVertex{v.g1, std::move(ex.head), std::move(ex.tail), v.p + 1});
  return out;
}

namespace {

struct Closure {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> nodes;
  std::vector<int> distance;
  std::vector<Arrow> arrows;
};

// Breadth-first closure of the exchange rule from (head, tail).
Closure close_under_exchange(std::vector<int> head, std::vector<int> tail) {
  Closure c;
  std::map<std::pair<std::vector<int>, std::vector<int>>, VertexId> seen;
  seen.emplace(std::make_pair(head, tail), 0);
  c.nodes.emplace_back(std::move(head), std::move(tail));
  c.distance.push_back(0);

  std::deque<VertexId> queue{0};
  while (!queue.empty()) {
    const VertexId id = queue.front();
    queue.pop_front();
    for (auto& ex : exchange_successors(c.nodes[id].first, c.nodes[id].second)) {
      auto key = std::make_pair(std::move(ex.head), std::move(ex.tail));
      auto [it, inserted] = seen.emplace(key, c.nodes.size());
      if (inserted) {
        c.nodes.push_back(std::move(key));
        c.distance.push_back(c.distance[id] + 1);
        queue.push_back(it->second);
      }
      c.arrows.push_back({id, it->second, ex.direction});
    }
  }
  std::sort(c.arrows.begin(), c.arrows.end());
  return c;
}

template <class Degree>
void validate_closure(const Closure& c, long long expected_vertices, Degree&& degree_of,
                      const std::string& what) {
  if (static_cast<long long>(c.nodes.size()) != expected_vertices)
    throw invariant_violation(fmt::format("{}: reached {} vertices, expected {}", what, c.nodes.size(),
                                          expected_vertices));
  for (VertexId id = 0; id < c.nodes.size(); ++id) {
    const int inv = cross_inversions(c.nodes[id].first, c.nodes[id].second);
    if (inv != c.distance[id] || inv != degree_of(id))
      throw invariant_violation(fmt::format("{}: vertex {} has BFS distance {} but {} cross inversions",
                                            what, id, c.distance[id], inv));
  }
  for (const Arrow& arrow : c.arrows) {
    if (c.distance[arrow.dst] != c.distance[arrow.src] + 1)
      throw invariant_violation(fmt::format("{}: arrow {} -> {} does not raise the degree by one", what,
                                            arrow.src, arrow.dst));
  }
  for (std::size_t i = 1; i < c.arrows.size(); ++i) {
    const Arrow& prev = c.arrows[i - 1];
    const Arrow& cur = c.arrows[i];
    if (prev.src == cur.src && prev.direction == cur.direction)
      throw invariant_violation(fmt::format("{}: two arrows in direction {} out of vertex {}", what,
                                            cur.direction, cur.src));
  }
}

template <class Vertex>
int max_degree_of(const std::vector<Vertex>& vertices, int Vertex::*field) {
  int best = 0;
  for (const auto& v : vertices)
    best = std::max(best, v.*field);
  return best;
}

std::vector<Arrow> arrows_from(const std::vector<Arrow>& arrows, VertexId id) {
  auto lo = std::lower_bound(arrows.begin(), arrows.end(), id,
                             [](const Arrow& a, VertexId v) { return a.src < v; });
  std::vector<Arrow> out;
  for (; lo != arrows.end() && lo->src == id; ++lo)
    out.push_back(*lo);
  return out;
}

} // namespace

RelativeDiagram RelativeDiagram::from_parts(SingularityProfile profile, std::vector<RelativeVertex> vertices,
                                            std::vector<Arrow> arrows, VertexId start) {
  RelativeDiagram d;
  d.profile = std::move(profile);
  d.vertices = std::move(vertices);
  d.arrows = std::move(arrows);
  std::sort(d.arrows.begin(), d.arrows.end());
  d.start = start;
  for (VertexId id = 0; id < d.vertices.size(); ++id) {
    if (!d.index_.emplace(std::make_pair(d.vertices[id].g2, d.vertices[id].g3), id).second)
      throw invariant_violation(fmt::format("duplicate relative vertex {}", d.vertices[id].to_string()));
  }
  for (const Arrow& a : d.arrows) {
    if (a.src >= d.vertices.size() || a.dst >= d.vertices.size())
      throw invariant_violation(fmt::format("arrow {} -> {} leaves the vertex set", a.src, a.dst));
    d.step_[{a.src, a.direction}] = a.dst;
  }
  return d;
}

std::optional<VertexId> RelativeDiagram::find(std::span<const int> g2, std::span<const int> g3) const {
  auto it = index_.find({std::vector<int>(g2.begin(), g2.end()), std::vector<int>(g3.begin(), g3.end())});
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

std::optional<VertexId> RelativeDiagram::successor(VertexId id, int direction) const {
  auto it = step_.find({id, direction});
  if (it == step_.end())
    return std::nullopt;
  return it->second;
}

std::vector<Arrow> RelativeDiagram::out_arrows(VertexId id) const { return arrows_from(arrows, id); }

int RelativeDiagram::max_degree() const { return max_degree_of(vertices, &RelativeVertex::p); }

RelativeDiagram build_relative_hasse(const SingularityProfile& profile) {
  const RelativeVertex origin = start_vertex(profile);
  Closure c = close_under_exchange(origin.g2, origin.g3);

  std::vector<RelativeVertex> vertices;
  vertices.reserve(c.nodes.size());
  for (VertexId id = 0; id < c.nodes.size(); ++id)
    vertices.push_back({profile.I, c.nodes[id].first, c.nodes[id].second, c.distance[id]});

  validate_closure(c, binomial(profile.a() + profile.b(), profile.a()),
                   [&](VertexId id) { return vertices[id].p; },
                   fmt::format("relative diagram for {} k={}", profile.mu.to_string(), profile.k));

  return RelativeDiagram::from_parts(profile, std::move(vertices), std::move(c.arrows), 0);
}

RegularDiagram RegularDiagram::from_parts(std::vector<int> values, int k, std::vector<RegularVertex> vertices,
                                          std::vector<Arrow> arrows, VertexId start) {
  RegularDiagram d;
  d.values = std::move(values);
  d.k = k;
  d.vertices = std::move(vertices);
  d.arrows = std::move(arrows);
  std::sort(d.arrows.begin(), d.arrows.end());
  d.start = start;
  for (VertexId id = 0; id < d.vertices.size(); ++id) {
    if (!d.index_.emplace(d.vertices[id].weight, id).second)
      throw invariant_violation(fmt::format("duplicate regular vertex {}", d.vertices[id].weight.to_string()));
  }
  for (const Arrow& a : d.arrows)
    d.step_[{a.src, a.direction}] = a.dst;
  return d;
}

std::optional<VertexId> RegularDiagram::find(const OrbitElement& weight) const {
  auto it = index_.find(weight);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

std::optional<VertexId> RegularDiagram::successor(VertexId id, int direction) const {
  auto it = step_.find({id, direction});
  if (it == step_.end())
    return std::nullopt;
  return it->second;
}

std::vector<Arrow> RegularDiagram::out_arrows(VertexId id) const { return arrows_from(arrows, id); }

int RegularDiagram::max_degree() const { return max_degree_of(vertices, &RegularVertex::degree); }

RegularDiagram build_regular_hasse(std::span<const int> values, int k) {
  const int m = static_cast<int>(values.size());
  if (!strictly_descending(values))
    throw input_error(input_errc::invalid_input,
                      fmt::format("regular diagram needs strictly descending values, got {}",
                                  format_groups({values})));
  if (k < 0 || k > m)
    throw input_error(input_errc::invalid_k, fmt::format("k' = {} out of range 0..{}", k, m));

  const auto split = values.begin() + k;
  Closure c = close_under_exchange({values.begin(), split}, {split, values.end()});

  std::vector<RegularVertex> vertices;
  vertices.reserve(c.nodes.size());
  for (VertexId id = 0; id < c.nodes.size(); ++id)
    vertices.push_back({{c.nodes[id].first, c.nodes[id].second}, c.distance[id]});

  validate_closure(c, binomial(m, k), [&](VertexId id) { return grassmannian_length(vertices[id].weight); },
                   fmt::format("regular diagram on {} k'={}", format_groups({values}), k));

  return RegularDiagram::from_parts({values.begin(), values.end()}, k, std::move(vertices),
                                    std::move(c.arrows), 0);
}

namespace {

template <class Vertex>
std::vector<int> profile_of(const std::vector<Vertex>& vertices, int Vertex::*field) {
  std::vector<int> counts;
  for (const auto& v : vertices) {
    const auto deg = static_cast<std::size_t>(v.*field);
    if (counts.size() <= deg)
      counts.resize(deg + 1, 0);
    ++counts[deg];
  }
  return counts;
}

} // namespace

std::vector<int> degree_profile(const RelativeDiagram& d) { return profile_of(d.vertices, &RelativeVertex::p); }

std::vector<int> degree_profile(const RegularDiagram& d) { return profile_of(d.vertices, &RegularVertex::degree); }

} // namespace sbgg
