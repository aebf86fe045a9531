#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sbgg {

/// An integral weight of sl(n) in the standard coordinates, taken modulo the
/// all-ones vector. Stored with the last coordinate shifted to zero.
class Weight {
public:
  explicit Weight(std::vector<int> coords);

  /// Parses "5,5,4,3,2,2,1,0".
  static Weight parse(std::string_view csv);

  int n() const noexcept { return static_cast<int>(coords_.size()); }
  std::span<const int> coords() const noexcept { return coords_; }
  int operator[](std::size_t i) const { return coords_[i]; }

  bool is_dominant() const;
  /// Sorted descending and renormalized.
  Weight dominant() const;

  std::string to_string() const;

  friend bool operator==(const Weight&, const Weight&) = default;

private:
  std::vector<int> coords_;
};

Weight rho(int n);

struct SingularityProfile {
  int n = 0;
  int k = 0;
  int l = 0;
  std::vector<int> S; // 1-based positions in the dominant arrangement
  std::vector<int> I; // repeated values, descending
  std::vector<int> J; // non-repeated values, descending
  Weight mu{std::vector<int>{0, 0}}; // dominant, normalized

  /// k - l: size of the moving block on G/(P∩Q).
  int a() const noexcept { return k - l; }
  /// n - k.
  int b() const noexcept { return n - k; }
  /// (k - l)(n - k - l): top chain degree of the singular complex.
  int top_degree() const noexcept { return (k - l) * (n - k - l); }
  bool is_repeated(int value) const;

  friend bool operator==(const SingularityProfile&, const SingularityProfile&) = default;
};

/// A weight split by the bar into a length-k head and a length-(n-k) tail.
/// Orbit elements have both blocks strictly descending.
struct BarredWeight {
  std::vector<int> first;
  std::vector<int> second;

  std::string to_string() const;

  friend bool operator==(const BarredWeight&, const BarredWeight&) = default;
  friend auto operator<=>(const BarredWeight&, const BarredWeight&) = default;
};

using OrbitElement = BarredWeight;

SingularityProfile analyze_singularity(const Weight& mu, int k);

/// The l-dominant regular conjugates of mu, ordered by descending first block.
std::vector<OrbitElement> compute_orbit(const Weight& mu, int k);
std::vector<OrbitElement> compute_orbit(const SingularityProfile& profile);

/// Orb -> Orb': strip each repeated value from both blocks.
OrbitElement delete_pairs(const OrbitElement& nu, const SingularityProfile& profile);
/// Orb' -> Orb, inverse of delete_pairs.
OrbitElement insert_pairs(const OrbitElement& nu_prime, const SingularityProfile& profile);

/// #{(x, y) : x in first, y in second, x < y}.
int grassmannian_length(const OrbitElement& nu);
int cross_inversions(std::span<const int> head, std::span<const int> tail);

/// Inversions of a sequence (pairs i < j with c[i] < c[j]); the number of
/// adjacent swaps sorting it descending.
int descending_inversions(std::span<const int> values);

bool strictly_descending(std::span<const int> values);

/// "(52|54|3210)". Digits are concatenated when every entry of every group is
/// in 0..9, otherwise entries are joined by commas.
std::string format_groups(std::initializer_list<std::span<const int>> groups);

long long binomial(int n, int r);

} // namespace sbgg
