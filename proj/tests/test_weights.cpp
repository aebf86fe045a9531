#include "oracles.hpp"

#include "sbgg/error.hpp"
#include "sbgg/weights.hpp"

#include "doctest.h"

#include <random>

using namespace sbgg;

namespace {

Weight w(std::vector<int> c) { return Weight(std::move(c)); }

} // namespace

TEST_SUITE_BEGIN("weights");

TEST_CASE("rho") {
  CHECK(rho(5) == w({4, 3, 2, 1, 0}));
  CHECK(rho(2) == w({1, 0}));
  CHECK(rho(8) == w({7, 6, 5, 4, 3, 2, 1, 0}));
  CHECK_THROWS_AS(rho(1), input_error);
  try {
    rho(0);
  } catch (const input_error& e) {
    CHECK(e.code() == input_errc::invalid_rank);
  }
}

TEST_CASE("normalization") {
  const Weight shifted = w({7, 7, 6, 5, 4, 4, 3, 2});
  CHECK(shifted == w({5, 5, 4, 3, 2, 2, 1, 0}));
  CHECK(shifted.coords().back() == 0);
  CHECK(Weight(std::vector<int>(shifted.coords().begin(), shifted.coords().end())) == shifted);
  CHECK(Weight::parse("5,5,4,3,2,2,1,0") == w({5, 5, 4, 3, 2, 2, 1, 0}));
  CHECK(Weight::parse(" -1, -2 ,-3") == w({2, 1, 0}));
  CHECK_THROWS_AS(Weight::parse("5,,3"), input_error);
  CHECK_THROWS_AS(Weight::parse("5,a"), input_error);
  CHECK_THROWS_AS(Weight::parse("5"), input_error);
}

TEST_CASE("analyze_singularity") {
  SUBCASE("two repeated pairs") {
    const auto p = analyze_singularity(w({5, 5, 4, 3, 2, 2, 1, 0}), 4);
    CHECK(p.l == 2);
    CHECK(p.S == std::vector<int>{1, 5});
    CHECK(p.I == std::vector<int>{5, 2});
    CHECK(p.J == std::vector<int>{4, 3, 1, 0});
    CHECK(p.a() == 2);
    CHECK(p.top_degree() == 4);
  }
  SUBCASE("regular") {
    const auto p = analyze_singularity(w({4, 3, 2, 1, 0}), 2);
    CHECK(p.l == 0);
    CHECK(p.S.empty());
    CHECK(p.I.empty());
    CHECK(p.J == std::vector<int>{4, 3, 2, 1, 0});
  }
  SUBCASE("non-dominant input is sorted first") {
    const auto p = analyze_singularity(w({2, 5, 0, 4, 2, 3, 5, 1}), 4);
    CHECK(p.mu == w({5, 5, 4, 3, 2, 2, 1, 0}));
    CHECK(p.S == std::vector<int>{1, 5});
  }
  SUBCASE("errors") {
    auto code_of = [](const std::vector<int>& c, int k) {
      try {
        analyze_singularity(Weight(c), k);
      } catch (const input_error& e) {
        return e.code();
      }
      FAIL("expected an input_error");
      return input_errc::invalid_input;
    };
    CHECK(code_of({3, 3, 3, 1}, 2) == input_errc::singularity_too_deep);
    CHECK(code_of({2, 2, 1, 1, 0, 0}, 2) == input_errc::no_regular_conjugate);
    CHECK(code_of({4, 3, 2, 1, 0}, 3) == input_errc::invalid_k);
    CHECK(code_of({4, 3, 2, 1, 0}, 0) == input_errc::invalid_k);
  }
  SUBCASE("gaps between repeated positions") {
    for (const auto& inst : oracle::admissible_family(10, false)) {
      const auto p = analyze_singularity(Weight(inst.mu), inst.k);
      for (std::size_t r = 1; r < p.S.size(); ++r)
        CHECK(p.S[r] >= p.S[r - 1] + 2);
      CHECK(static_cast<int>(p.J.size()) == p.n - 2 * p.l);
      for (int v : p.I)
        CHECK(std::find(p.J.begin(), p.J.end(), v) == p.J.end());
    }
  }
}

TEST_CASE("compute_orbit") {
  SUBCASE("regular G(2,5) orbit") {
    const auto orbit = compute_orbit(w({4, 3, 2, 1, 0}), 2);
    const std::vector<OrbitElement> expected{
        {{4, 3}, {2, 1, 0}}, {{4, 2}, {3, 1, 0}}, {{4, 1}, {3, 2, 0}}, {{4, 0}, {3, 2, 1}},
        {{3, 2}, {4, 1, 0}}, {{3, 1}, {4, 2, 0}}, {{3, 0}, {4, 2, 1}}, {{2, 1}, {4, 3, 0}},
        {{2, 0}, {4, 3, 1}}, {{1, 0}, {4, 3, 2}},
    };
    CHECK(orbit == expected);
  }
  SUBCASE("singular orbit") {
    const auto orbit = compute_orbit(w({5, 5, 4, 3, 2, 2, 1, 0}), 4);
    CHECK(orbit.size() == 6);
    CHECK(std::find(orbit.begin(), orbit.end(), OrbitElement{{5, 4, 3, 2}, {5, 2, 1, 0}}) != orbit.end());
  }
  SUBCASE("forced split") {
    const auto orbit = compute_orbit(w({1, 1}), 1);
    REQUIRE(orbit.size() == 1);
    CHECK(orbit[0] == OrbitElement{{0}, {0}});
  }
  SUBCASE("matches brute-force splitting and the binomial count") {
    for (const auto& inst : oracle::admissible_family(12, false)) {
      const auto p = analyze_singularity(Weight(inst.mu), inst.k);
      const auto orbit = compute_orbit(p);
      const auto brute = oracle::splittings(std::vector<int>(p.mu.coords().begin(), p.mu.coords().end()), inst.k);
      CHECK(std::set<OrbitElement>(orbit.begin(), orbit.end()) == brute);
      CHECK(static_cast<long long>(orbit.size()) == binomial(p.n - 2 * p.l, p.k - p.l));
    }
  }
}

TEST_CASE("delete_pairs and insert_pairs") {
  const auto p = analyze_singularity(w({5, 5, 4, 3, 2, 2, 1, 0}), 4);
  CHECK(delete_pairs({{5, 4, 3, 2}, {5, 2, 1, 0}}, p) == OrbitElement{{4, 3}, {1, 0}});
  CHECK(delete_pairs({{5, 2, 1, 0}, {5, 4, 3, 2}}, p) == OrbitElement{{1, 0}, {4, 3}});
  CHECK(insert_pairs({{4, 3}, {1, 0}}, p) == OrbitElement{{5, 4, 3, 2}, {5, 2, 1, 0}});

  // Head given as g1·g2 of a relative vertex, unsorted.
  CHECK(delete_pairs({{5, 2, 4, 3}, {5, 2, 1, 0}}, p) == OrbitElement{{4, 3}, {1, 0}});
  CHECK_THROWS_AS(delete_pairs({{5, 5, 4, 3}, {2, 2, 1, 0}}, p), input_error);
  CHECK_THROWS_AS(delete_pairs({{5, 4, 3}, {5, 2, 2, 1, 0}}, p), input_error);
  CHECK_THROWS_AS(insert_pairs({{4, 2}, {1, 0}}, p), input_error);

  SUBCASE("regular weights pass through") {
    const auto reg = analyze_singularity(w({4, 3, 2, 1, 0}), 2);
    for (const auto& nu : compute_orbit(reg)) {
      CHECK(delete_pairs(nu, reg) == nu);
      CHECK(insert_pairs(nu, reg) == nu);
    }
  }

  SUBCASE("Orb -> Orb' is a bijection") {
    for (const auto& inst : oracle::admissible_family(12, false)) {
      const auto prof = analyze_singularity(Weight(inst.mu), inst.k);
      std::set<OrbitElement> images;
      for (const auto& nu : compute_orbit(prof)) {
        const auto reduced = delete_pairs(nu, prof);
        CHECK(insert_pairs(reduced, prof) == nu);
        images.insert(reduced);
      }
      const auto reduced_orbit = oracle::splittings(prof.J, prof.k - prof.l);
      CHECK(images == reduced_orbit);
    }
  }
}

TEST_CASE("grassmannian_length") {
  CHECK(grassmannian_length({{4, 3}, {2, 1, 0}}) == 0);
  CHECK(grassmannian_length({{4, 2}, {3, 1, 0}}) == 1);
  CHECK(grassmannian_length({{1, 0}, {4, 3, 2}}) == 6);

  SUBCASE("extremes over the reduced orbit") {
    for (const auto& inst : oracle::admissible_family(12, false)) {
      const auto p = analyze_singularity(Weight(inst.mu), inst.k);
      int longest = 0;
      for (const auto& nu : compute_orbit(p)) {
        const auto reduced = delete_pairs(nu, p);
        const int len = grassmannian_length(reduced);
        CHECK(len == oracle::length_by_merge(reduced));
        longest = std::max(longest, len);
      }
      const auto first = delete_pairs(compute_orbit(p).front(), p);
      CHECK(grassmannian_length(first) == 0);
      CHECK(longest == p.top_degree());
    }
  }
}

TEST_CASE("shift invariance") {
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> shift(-50, 50);
  for (const auto& inst : oracle::admissible_family(9, false)) {
    std::vector<int> moved = inst.mu;
    const int c = shift(rng);
    for (int& v : moved)
      v += c;
    const auto base = analyze_singularity(Weight(inst.mu), inst.k);
    const auto shifted = analyze_singularity(Weight(moved), inst.k);
    CHECK(base == shifted);
    CHECK(compute_orbit(base) == compute_orbit(shifted));
  }
}

TEST_CASE("helpers") {
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(12, 6) == 924);
  CHECK(binomial(3, 5) == 0);
  CHECK(descending_inversions(std::vector<int>{5, 2, 4, 3}) == 2);
  CHECK(format_groups({std::vector<int>{5, 2}, std::vector<int>{4, 3}}) == "(52|43)");
  CHECK(format_groups({std::vector<int>{12, 2}, std::vector<int>{}}) == "(12,2|)");
  CHECK(strictly_descending(std::vector<int>{3, 2, 0}));
  CHECK_FALSE(strictly_descending(std::vector<int>{3, 3, 0}));
}

TEST_SUITE_END();
