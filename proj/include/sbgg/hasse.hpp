#pragma once

#include "sbgg/weights.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sbgg {

using VertexId = std::size_t;

/// A weight on G/(P∩Q): (g1 | g2 | g3) with g1 the fixed repeated values.
struct RelativeVertex {
  std::vector<int> g1;
  std::vector<int> g2;
  std::vector<int> g3;
  int p = 0;

  /// "(52|43|5210)"; g1 is omitted when empty.
  std::string to_string() const;

  friend bool operator==(const RelativeVertex&, const RelativeVertex&) = default;
};

/// Arrow of a Hasse diagram. `direction` is the 1-based position in the
/// moving block that changes.
struct Arrow {
  VertexId src = 0;
  VertexId dst = 0;
  int direction = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

struct RelativeDiagram {
  SingularityProfile profile;
  std::vector<RelativeVertex> vertices; // BFS order
  std::vector<Arrow> arrows;            // sorted by (src, dst)
  VertexId start = 0;

  std::optional<VertexId> find(std::span<const int> g2, std::span<const int> g3) const;
  /// Target of the direction-r arrow out of id, if there is one.
  std::optional<VertexId> successor(VertexId id, int direction) const;
  std::vector<Arrow> out_arrows(VertexId id) const;
  int max_degree() const;

  /// Indexes prebuilt parts; used by the builder and by JSON loading.
  static RelativeDiagram from_parts(SingularityProfile profile, std::vector<RelativeVertex> vertices,
                                    std::vector<Arrow> arrows, VertexId start = 0);

  friend bool operator==(const RelativeDiagram& lhs, const RelativeDiagram& rhs) {
    return lhs.profile == rhs.profile && lhs.vertices == rhs.vertices && lhs.arrows == rhs.arrows &&
           lhs.start == rhs.start;
  }

private:
  std::map<std::pair<std::vector<int>, std::vector<int>>, VertexId> index_;
  std::map<std::pair<VertexId, int>, VertexId> step_;
};

struct RegularVertex {
  OrbitElement weight;
  int degree = 0;

  friend bool operator==(const RegularVertex&, const RegularVertex&) = default;
};

/// Hasse diagram of the l-dominant regular conjugates of a regular weight.
struct RegularDiagram {
  std::vector<int> values; // descending
  int k = 0;
  std::vector<RegularVertex> vertices; // BFS order
  std::vector<Arrow> arrows;
  VertexId start = 0;

  std::optional<VertexId> find(const OrbitElement& weight) const;
  std::optional<VertexId> successor(VertexId id, int direction) const;
  std::vector<Arrow> out_arrows(VertexId id) const;
  int max_degree() const;

  static RegularDiagram from_parts(std::vector<int> values, int k, std::vector<RegularVertex> vertices,
                                   std::vector<Arrow> arrows, VertexId start = 0);

private:
  std::map<OrbitElement, VertexId> index_;
  std::map<std::pair<VertexId, int>, VertexId> step_;
};

/// Local arrow rule shared by both diagram kinds. For each position r of
/// `head`, x = head[r] is exchanged with y = max{z in tail : z < x}, provided
/// y exceeds head[r+1] (unbounded below for the last position).
/// Returns (1-based direction, new head, new tail) triples.
struct Exchange {
  int direction = 0;
  std::vector<int> head;
  std::vector<int> tail;
};
std::vector<Exchange> exchange_successors(std::span<const int> head, std::span<const int> tail);

RelativeVertex start_vertex(const SingularityProfile& profile);
std::vector<std::pair<int, RelativeVertex>> successors(const RelativeVertex& v);

RelativeDiagram build_relative_hasse(const SingularityProfile& profile);
RegularDiagram build_regular_hasse(std::span<const int> values, int k);

/// Number of vertices at each degree 0..max.
std::vector<int> degree_profile(const RelativeDiagram& d);
std::vector<int> degree_profile(const RegularDiagram& d);

} // namespace sbgg
