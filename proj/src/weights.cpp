#include "sbgg/weights.hpp"

#include "sbgg/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <functional>
#include <iterator>
#include <map>

namespace sbgg {

const char* to_string(input_errc code) {
  switch (code) {
  case input_errc::invalid_rank: return "invalid-rank";
  case input_errc::invalid_k: return "invalid-k";
  case input_errc::singularity_too_deep: return "singularity-too-deep";
  case input_errc::no_regular_conjugate: return "no-regular-conjugate";
  case input_errc::invalid_orbit_element: return "invalid-orbit-element";
  case input_errc::invalid_input: return "invalid-input";
  }
  return "unknown";
}

Weight::Weight(std::vector<int> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2)
    throw input_error(input_errc::invalid_rank,
                      fmt::format("weight needs at least 2 coordinates, got {}", coords_.size()));
  const int shift = coords_.back();
  for (int& c : coords_)
    c -= shift;
}

Weight Weight::parse(std::string_view csv) {
  std::vector<int> coords;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t end = csv.find(',', pos);
    if (end == std::string_view::npos)
      end = csv.size();
    std::string_view token = csv.substr(pos, end - pos);
    while (!token.empty() && token.front() == ' ')
      token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ')
      token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw input_error(input_errc::invalid_input,
                        fmt::format("cannot parse weight coordinate '{}'", token));
    coords.push_back(value);
    pos = end + 1;
  }
  return Weight(std::move(coords));
}

bool Weight::is_dominant() const {
  return std::is_sorted(coords_.begin(), coords_.end(), std::greater<>{});
}

Weight Weight::dominant() const {
  std::vector<int> sorted = coords_;
  std::sort(sorted.begin(), sorted.end(), std::greater<>{});
  return Weight(std::move(sorted));
}

std::string Weight::to_string() const {
  return fmt::format("({})", fmt::join(coords_, ","));
}

Weight rho(int n) {
  if (n < 2)
    throw input_error(input_errc::invalid_rank, fmt::format("rank n must be >= 2, got {}", n));
  std::vector<int> coords(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    coords[static_cast<std::size_t>(i)] = n - 1 - i;
  return Weight(std::move(coords));
}

bool SingularityProfile::is_repeated(int value) const {
  return std::find(I.begin(), I.end(), value) != I.end();
}

SingularityProfile analyze_singularity(const Weight& mu, int k) {
  const int n = mu.n();
  if (k < 1 || 2 * k > n)
    throw input_error(input_errc::invalid_k,
                      fmt::format("k must satisfy 1 <= k <= n/2 (n = {}), got {}", n, k));

  SingularityProfile profile;
  profile.n = n;
  profile.k = k;
  profile.mu = mu.dominant();

  const auto c = profile.mu.coords();
  std::size_t i = 0;
  while (i < c.size()) {
    std::size_t j = i;
    while (j < c.size() && c[j] == c[i])
      ++j;
    const std::size_t mult = j - i;
    if (mult >= 3)
      throw input_error(input_errc::singularity_too_deep,
                        fmt::format("value {} occurs {} times; at most twice is allowed", c[i], mult));
    if (mult == 2) {
      profile.S.push_back(static_cast<int>(i) + 1);
      profile.I.push_back(c[i]);
    } else {
      profile.J.push_back(c[i]);
    }
    i = j;
  }
  profile.l = static_cast<int>(profile.I.size());
  if (profile.l > k)
    throw input_error(input_errc::no_regular_conjugate,
                      fmt::format("{} repeated pairs exceed k = {}; no regular conjugate", profile.l, k));
  return profile;
}

namespace {

std::vector<int> merged_descending(std::span<const int> lhs, std::span<const int> rhs) {
  std::vector<int> out(lhs.begin(), lhs.end());
  out.insert(out.end(), rhs.begin(), rhs.end());
  std::sort(out.begin(), out.end(), std::greater<>{});
  return out;
}

std::map<int, int> multiset_of(std::span<const int> values) {
  std::map<int, int> counts;
  for (int v : values)
    ++counts[v];
  return counts;
}

} // namespace

std::vector<OrbitElement> compute_orbit(const SingularityProfile& profile) {
  const auto& J = profile.J;
  const int pick = profile.a();
  const int m = static_cast<int>(J.size());
  std::vector<OrbitElement> orbit;
  if (pick > m)
    return orbit;

  // Lexicographically smallest index sets first, so first blocks come out descending.
  std::vector<int> idx(static_cast<std::size_t>(pick));
  for (int t = 0; t < pick; ++t)
    idx[static_cast<std::size_t>(t)] = t;
  while (true) {
    std::vector<int> chosen, rest;
    std::size_t next = 0;
    for (int t = 0; t < m; ++t) {
      if (next < idx.size() && idx[next] == t) {
        chosen.push_back(J[static_cast<std::size_t>(t)]);
        ++next;
      } else {
        rest.push_back(J[static_cast<std::size_t>(t)]);
      }
    }
    orbit.push_back({merged_descending(profile.I, chosen), merged_descending(profile.I, rest)});

    int t = pick - 1;
    while (t >= 0 && idx[static_cast<std::size_t>(t)] == m - pick + t)
      --t;
    if (t < 0)
      break;
    ++idx[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < pick; ++u)
      idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u - 1)] + 1;
  }
  return orbit;
}

std::vector<OrbitElement> compute_orbit(const Weight& mu, int k) {
  return compute_orbit(analyze_singularity(mu, k));
}

OrbitElement delete_pairs(const OrbitElement& nu, const SingularityProfile& profile) {
  // Blocks may be given in any order (e.g. g1·g2 as read off a relative
  // vertex); they are compared as sets.
  const std::vector<int> head = merged_descending(nu.first, {});
  const std::vector<int> tail = merged_descending(nu.second, {});
  const bool shape_ok = static_cast<int>(head.size()) == profile.k &&
                        static_cast<int>(tail.size()) == profile.n - profile.k && strictly_descending(head) &&
                        strictly_descending(tail);
  if (!shape_ok || multiset_of(merged_descending(head, tail)) != multiset_of(profile.mu.coords()))
    throw input_error(input_errc::invalid_orbit_element,
                      fmt::format("{} is not in the orbit of {} for k = {}", nu.to_string(),
                                  profile.mu.to_string(), profile.k));

  OrbitElement out;
  std::copy_if(head.begin(), head.end(), std::back_inserter(out.first),
               [&](int v) { return !profile.is_repeated(v); });
  std::copy_if(tail.begin(), tail.end(), std::back_inserter(out.second),
               [&](int v) { return !profile.is_repeated(v); });
  return out;
}

OrbitElement insert_pairs(const OrbitElement& nu_prime, const SingularityProfile& profile) {
  const bool shape_ok = static_cast<int>(nu_prime.first.size()) == profile.a() &&
                        static_cast<int>(nu_prime.second.size()) == profile.n - profile.k - profile.l &&
                        strictly_descending(nu_prime.first) && strictly_descending(nu_prime.second);
  if (!shape_ok || merged_descending(nu_prime.first, nu_prime.second) != profile.J)
    throw input_error(input_errc::invalid_orbit_element,
                      fmt::format("{} is not in the reduced orbit on {}", nu_prime.to_string(),
                                  format_groups({profile.J})));

  OrbitElement out{merged_descending(nu_prime.first, profile.I),
                   merged_descending(nu_prime.second, profile.I)};
  if (!strictly_descending(out.first) || !strictly_descending(out.second))
    throw invariant_violation(fmt::format("inserting repeated values into {} produced {}",
                                          nu_prime.to_string(), out.to_string()));
  return out;
}

int cross_inversions(std::span<const int> head, std::span<const int> tail) {
  int count = 0;
  for (int x : head)
    for (int y : tail)
      if (x < y)
        ++count;
  return count;
}

int grassmannian_length(const OrbitElement& nu) {
  return cross_inversions(nu.first, nu.second);
}

int descending_inversions(std::span<const int> values) {
  int count = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i] < values[j])
        ++count;
  return count;
}

bool strictly_descending(std::span<const int> values) {
  return std::adjacent_find(values.begin(), values.end(), std::less_equal<>{}) == values.end();
}

std::string format_groups(std::initializer_list<std::span<const int>> groups) {
  bool compact = true;
  for (auto g : groups)
    for (int v : g)
      compact = compact && v >= 0 && v <= 9;

  std::string out = "(";
  bool first_group = true;
  for (auto g : groups) {
    if (!first_group)
      out += '|';
    first_group = false;
    out += compact ? fmt::format("{}", fmt::join(g, "")) : fmt::format("{}", fmt::join(g, ","));
  }
  out += ')';
  return out;
}

std::string BarredWeight::to_string() const {
  return format_groups({first, second});
}

long long binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n)
    return 0;
  long long result = 1;
  for (int i = 1; i <= r; ++i)
    result = result * (n - r + i) / i;
  return result;
}

} // namespace sbgg
