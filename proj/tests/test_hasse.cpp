#include "oracles.hpp"

#include "sbgg/error.hpp"
#include "sbgg/hasse.hpp"

#include "doctest.h"

#include <deque>

using namespace sbgg;

namespace {

SingularityProfile profile_of(std::vector<int> mu, int k) { return analyze_singularity(Weight(std::move(mu)), k); }

RelativeVertex rv(std::vector<int> g1, std::vector<int> g2, std::vector<int> g3) {
  RelativeVertex v{std::move(g1), std::move(g2), std::move(g3), 0};
  v.p = cross_inversions(v.g2, v.g3);
  return v;
}

using Edge = std::tuple<std::string, std::string, int>;

std::set<Edge> edges_of(const RelativeDiagram& d) {
  std::set<Edge> out;
  for (const auto& a : d.arrows)
    out.emplace(d.vertices[a.src].to_string(), d.vertices[a.dst].to_string(), a.direction);
  return out;
}

std::set<Edge> edges_of(const RegularDiagram& d) {
  std::set<Edge> out;
  for (const auto& a : d.arrows)
    out.emplace(d.vertices[a.src].weight.to_string(), d.vertices[a.dst].weight.to_string(), a.direction);
  return out;
}

std::vector<int> bfs_distances(std::size_t count, const std::vector<Arrow>& arrows, VertexId start) {
  std::vector<std::vector<VertexId>> out(count);
  for (const auto& a : arrows)
    out[a.src].push_back(a.dst);
  std::vector<int> dist(count, -1);
  std::deque<VertexId> queue{start};
  dist[start] = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : out[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

} // namespace

TEST_SUITE_BEGIN("hasse");

TEST_CASE("start_vertex") {
  CHECK(start_vertex(profile_of({5, 5, 4, 3, 2, 2, 1, 0}, 4)) == rv({5, 2}, {5, 4}, {3, 2, 1, 0}));
  CHECK(start_vertex(profile_of({5, 4, 3, 2, 1, 1, 0, 0}, 4)) == rv({1, 0}, {5, 4}, {3, 2, 1, 0}));
  const auto full = start_vertex(profile_of({3, 3, 2, 2, 1, 0}, 2));
  CHECK(full.g1 == std::vector<int>{3, 2});
  CHECK(full.g2.empty());
  CHECK(full.g3 == std::vector<int>{3, 2, 1, 0});
  CHECK(full.to_string() == "(32||3210)");
}

TEST_CASE("successors") {
  SUBCASE("only direction 2") {
    const auto next = successors(rv({5, 2}, {4, 3}, {5, 2, 1, 0}));
    REQUIRE(next.size() == 1);
    CHECK(next[0].first == 2);
    CHECK(next[0].second == rv({5, 2}, {4, 2}, {5, 3, 1, 0}));
    CHECK(next[0].second.p == 3);
  }
  SUBCASE("both directions") {
    const auto next = successors(rv({5, 2}, {4, 2}, {5, 3, 1, 0}));
    REQUIRE(next.size() == 2);
    CHECK(next[0].first == 1);
    CHECK(next[0].second == rv({5, 2}, {3, 2}, {5, 4, 1, 0}));
    CHECK(next[1].first == 2);
    CHECK(next[1].second == rv({5, 2}, {4, 1}, {5, 3, 2, 0}));
  }
  SUBCASE("terminal") {
    CHECK(successors(rv({5, 2}, {1, 0}, {5, 4, 3, 2})).empty());
  }
  SUBCASE("arbitrary integers use an unbounded sentinel") {
    const auto next = exchange_successors(std::vector<int>{-3, -7}, std::vector<int>{-4, -8, -20});
    REQUIRE(next.size() == 2);
    CHECK(next[0].head == std::vector<int>{-4, -7});
    CHECK(next[1].head == std::vector<int>{-3, -8});
    CHECK(next[1].tail == std::vector<int>{-4, -7, -20});
  }
}

TEST_CASE("regular G(2,5) diagram") {
  const std::vector<int> values{4, 3, 2, 1, 0};
  const auto d = build_regular_hasse(values, 2);
  CHECK(d.vertices.size() == 10);
  // Arrows as drawn: horizontal ones change the second head entry.
  const std::set<Edge> drawn{
      {"(43|210)", "(42|310)", 2}, {"(42|310)", "(41|320)", 2}, {"(41|320)", "(40|321)", 2},
      {"(42|310)", "(32|410)", 1}, {"(41|320)", "(31|420)", 1}, {"(40|321)", "(30|421)", 1},
      {"(32|410)", "(31|420)", 2}, {"(31|420)", "(30|421)", 2}, {"(31|420)", "(21|430)", 1},
      {"(30|421)", "(20|431)", 1}, {"(21|430)", "(20|431)", 2}, {"(20|431)", "(10|432)", 1},
  };
  CHECK(edges_of(d) == drawn);
  CHECK(degree_profile(d) == std::vector<int>{1, 1, 2, 2, 2, 1, 1});
  CHECK(d.vertices[d.start].weight == OrbitElement{{4, 3}, {2, 1, 0}});

  SUBCASE("relative builder agrees for l = 0") {
    const auto rel = build_relative_hasse(profile_of({4, 3, 2, 1, 0}, 2));
    CHECK(edges_of(rel) == drawn);
  }
}

TEST_CASE("relative diagram for (5,5,4,3,2,2,1,0)") {
  const auto d = build_relative_hasse(profile_of({5, 5, 4, 3, 2, 2, 1, 0}, 4));
  CHECK(d.vertices.size() == 15);
  CHECK(d.vertices[d.start].to_string() == "(52|54|3210)");
  CHECK(degree_profile(d) == std::vector<int>{1, 1, 2, 2, 3, 2, 2, 1, 1});
  // Rows of the printed diagram: horizontal arrows (direction 2) then the
  // vertical ones (direction 1).
  const std::vector<std::vector<std::string>> rows{
      {"(52|54|3210)", "(52|53|4210)", "(52|52|4310)", "(52|51|4320)", "(52|50|4321)"},
      {"(52|43|5210)", "(52|42|5310)", "(52|41|5320)", "(52|40|5321)"},
      {"(52|32|5410)", "(52|31|5420)", "(52|30|5421)"},
      {"(52|21|5430)", "(52|20|5431)"},
      {"(52|10|5432)"},
  };
  std::set<Edge> drawn;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j + 1 < rows[i].size(); ++j)
      drawn.emplace(rows[i][j], rows[i][j + 1], 2);
    if (i + 1 < rows.size())
      for (std::size_t j = 1; j < rows[i].size(); ++j)
        drawn.emplace(rows[i][j], rows[i + 1][j - 1], 1);
  }
  CHECK(drawn.size() == 20);
  CHECK(edges_of(d) == drawn);
}

TEST_CASE("small regular diagrams") {
  CHECK(degree_profile(build_regular_hasse(std::vector<int>{4, 3, 1, 0}, 2)) == std::vector<int>{1, 1, 2, 1, 1});
  const auto single = build_regular_hasse(std::vector<int>{4, 3, 1, 0}, 0);
  CHECK(single.vertices.size() == 1);
  CHECK(single.arrows.empty());
  CHECK_THROWS_AS(build_regular_hasse(std::vector<int>{4, 4, 1}, 1), input_error);
  CHECK_THROWS_AS(build_regular_hasse(std::vector<int>{4, 1}, 3), input_error);

  const auto trivial = build_relative_hasse(profile_of({3, 3, 2, 2, 1, 0}, 2));
  CHECK(trivial.vertices.size() == 1);
  CHECK(trivial.arrows.empty());
}

TEST_CASE("exchange rule equals the covering relation") {
  for (const auto& inst : oracle::admissible_family(10)) {
    const auto p = analyze_singularity(Weight(inst.mu), inst.k);
    const auto d = build_relative_hasse(p);

    std::vector<int> pool = p.I;
    pool.insert(pool.end(), p.J.begin(), p.J.end());
    const auto brute_vertices = oracle::splittings(pool, p.a());
    std::set<Edge> expected;
    for (const auto& c : oracle::covers(brute_vertices)) {
      const RelativeVertex s{p.I, c.src.first, c.src.second, 0};
      const RelativeVertex t{p.I, c.dst.first, c.dst.second, 0};
      expected.emplace(s.to_string(), t.to_string(), c.direction);
    }
    CHECK(d.vertices.size() == brute_vertices.size());
    CHECK(edges_of(d) == expected);
  }
}

TEST_CASE("degree laws") {
  for (const auto& inst : oracle::admissible_family(12, false)) {
    const auto p = analyze_singularity(Weight(inst.mu), inst.k);
    const auto d = build_relative_hasse(p);
    CHECK(static_cast<long long>(d.vertices.size()) == binomial(p.a() + p.b(), p.a()));

    const auto dist = bfs_distances(d.vertices.size(), d.arrows, d.start);
    int zero_degree = 0;
    for (VertexId id = 0; id < d.vertices.size(); ++id) {
      const auto& v = d.vertices[id];
      CHECK(v.g1 == p.I);
      CHECK(v.p == dist[id]);
      CHECK(v.p == oracle::length_by_merge({v.g2, v.g3}));
      zero_degree += v.p == 0;
    }
    CHECK(zero_degree == 1);

    std::set<std::pair<VertexId, int>> seen;
    for (const auto& a : d.arrows) {
      CHECK(d.vertices[a.dst].p == d.vertices[a.src].p + 1);
      CHECK(seen.emplace(a.src, a.direction).second);
      // Only position `direction` of the moving block changes.
      const auto& s = d.vertices[a.src].g2;
      const auto& t = d.vertices[a.dst].g2;
      for (std::size_t i = 0; i < s.size(); ++i)
        CHECK((s[i] == t[i]) == (static_cast<int>(i) + 1 != a.direction));
    }
  }
}

TEST_CASE("regular diagram degrees and counts") {
  for (int m = 1; m <= 12; ++m) {
    std::vector<int> values;
    for (int v = m - 1; v >= 0; --v)
      values.push_back(2 * v);
    for (int k = 0; k <= m; ++k) {
      const auto d = build_regular_hasse(values, k);
      CHECK(static_cast<long long>(d.vertices.size()) == binomial(m, k));
      for (const auto& v : d.vertices)
        CHECK(v.degree == grassmannian_length(v.weight));
      CHECK(d.max_degree() == k * (m - k));
    }
  }
}

TEST_CASE("length-2 intervals") {
  // Young-lattice intervals of length 2 are chains (1 path) or squares (2).
  int chains = 0, squares = 0;
  for (const auto& inst : oracle::admissible_family(12, false)) {
    const auto d = build_relative_hasse(analyze_singularity(Weight(inst.mu), inst.k));
    std::vector<std::vector<VertexId>> out(d.vertices.size());
    for (const auto& a : d.arrows)
      out[a.src].push_back(a.dst);
    for (VertexId s = 0; s < d.vertices.size(); ++s) {
      std::map<VertexId, int> reach;
      for (VertexId m : out[s])
        for (VertexId t : out[m])
          ++reach[t];
      for (const auto& [t, count] : reach) {
        CHECK(count <= 2);
        (count == 1 ? chains : squares) += 1;
      }
    }
  }
  CHECK(chains > 0);
  CHECK(squares > 0);
}

TEST_CASE("lookup helpers") {
  const auto d = build_relative_hasse(profile_of({5, 5, 4, 3, 2, 2, 1, 0}, 4));
  const auto id = d.find(std::vector<int>{4, 2}, std::vector<int>{5, 3, 1, 0});
  REQUIRE(id);
  CHECK(d.successor(*id, 1) == d.find(std::vector<int>{3, 2}, std::vector<int>{5, 4, 1, 0}));
  CHECK(d.out_arrows(*id).size() == 2);
  CHECK_FALSE(d.find(std::vector<int>{4, 4}, std::vector<int>{5, 3, 1, 0}));
  CHECK(d.max_degree() == 8);
}

TEST_SUITE_END();
