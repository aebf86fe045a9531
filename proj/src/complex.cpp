#include "sbgg/complex.hpp"

#include "sbgg/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace sbgg {

namespace {

int sum_of(std::span<const int> values) { return std::accumulate(values.begin(), values.end(), 0); }

OrbitElement pushed_weight_of(const RelativeVertex& v) {
  OrbitElement nu;
  nu.first = v.g1;
  nu.first.insert(nu.first.end(), v.g2.begin(), v.g2.end());
  std::sort(nu.first.begin(), nu.first.end(), std::greater<>{});
  nu.second = v.g3;
  return nu;
}

BarredWeight minus_rho(const OrbitElement& nu, int n) {
  const Weight r = rho(n);
  BarredWeight out;
  std::size_t pos = 0;
  for (int v : nu.first)
    out.first.push_back(v - r[pos++]);
  for (int v : nu.second)
    out.second.push_back(v - r[pos++]);
  return out;
}

std::string describe(const SingularComplex& c, VertexId id) {
  const auto& v = c.vertices[id];
  return fmt::format("#{} {} [p={} q={} s={}]", id, v.pushed_weight.to_string(), v.p, v.q, v.s);
}

} // namespace

std::optional<VertexId> SingularComplex::find_base(VertexId base) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), base,
                             [](const SingularVertex& v, VertexId b) { return v.base < b; });
  if (it == vertices.end() || it->base != base)
    return std::nullopt;
  return static_cast<VertexId>(it - vertices.begin());
}

SingularComplex assemble(const LabeledDiagram& labeled) {
  const RelativeDiagram& d = labeled.diagram;
  const SingularityProfile& profile = d.profile;
  const int shift = profile.l * profile.a();

  SingularComplex c;
  c.profile = profile;
  c.chain_spaces.resize(static_cast<std::size_t>(profile.top_degree()) + 1);

  for (VertexId base = 0; base < d.vertices.size(); ++base) {
    const Label& label = labeled.labels[base];
    if (label.vanishes())
      continue;
    const RelativeVertex& rv = d.vertices[base];
    SingularVertex v;
    v.base = base;
    v.p = rv.p;
    v.q = *label.q;
    v.s = v.p + v.q - shift;
    v.pushed_weight = pushed_weight_of(rv);
    v.bundle_weight = minus_rho(v.pushed_weight, profile.n);

    if (v.s < 0 || v.s > profile.top_degree())
      throw invariant_violation(fmt::format("vertex {} lands in chain degree {} outside 0..{}", rv.to_string(),
                                            v.s, profile.top_degree()));
    const int length = grassmannian_length(delete_pairs(v.pushed_weight, profile));
    if (length != v.s)
      throw invariant_violation(fmt::format("vertex {} has s = {} but its reduced weight has length {}",
                                            rv.to_string(), v.s, length));
    c.chain_spaces[static_cast<std::size_t>(v.s)].push_back(c.vertices.size());
    c.vertices.push_back(std::move(v));
  }

  for (VertexId src = 0; src < c.vertices.size(); ++src) {
    const VertexId src_base = c.vertices[src].base;
    for (int r = 1; r <= profile.a(); ++r) {
      VertexId cur = src_base;
      int steps = 0;
      std::optional<VertexId> dst;
      while (auto next = d.successor(cur, r)) {
        ++steps;
        cur = *next;
        if (!labeled.labels[cur].vanishes()) {
          dst = c.find_base(cur);
          break;
        }
      }
      if (!dst)
        continue;

      JumpArrow arrow;
      arrow.src = src;
      arrow.dst = *dst;
      arrow.direction = r;
      arrow.steps = steps;
      arrow.order = sum_of(d.vertices[src_base].g2) - sum_of(d.vertices[cur].g2);
      arrow.standard = steps == 1;
      if (c.vertices[*dst].s != c.vertices[src].s + 1)
        throw invariant_violation(fmt::format("jump arrow {} -> {} (direction {}, {} steps) breaks the grading",
                                              describe(c, src), describe(c, *dst), r, steps));
      c.arrows.push_back(arrow);
    }
  }
  return c;
}

OrbitElement enright_shelton_image(const SingularVertex& v, const SingularityProfile& profile) {
  return delete_pairs(v.pushed_weight, profile);
}

RegularDiagram oracle_diagram(const SingularityProfile& profile) {
  return build_regular_hasse(profile.J, profile.a());
}

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name)
      return &c;
  return nullptr;
}

namespace {

// Image of every complex vertex in the oracle, or nullopt where it is missing.
std::vector<std::optional<VertexId>> image_map(const SingularComplex& c, const RegularDiagram& oracle) {
  std::vector<std::optional<VertexId>> image;
  image.reserve(c.vertices.size());
  for (const auto& v : c.vertices)
    image.push_back(oracle.find(enright_shelton_image(v, c.profile)));
  return image;
}

} // namespace

VerificationReport oracle_check(const SingularComplex& c, const SingularityProfile& profile) {
  const RegularDiagram oracle = oracle_diagram(profile);
  const auto image = image_map(c, oracle);

  CheckResult bijection{"oracle bijection"};
  std::vector<int> hits(oracle.vertices.size(), 0);
  for (VertexId id = 0; id < c.vertices.size(); ++id) {
    if (!image[id]) {
      bijection.fail(fmt::format("{} has no image in the oracle", describe(c, id)));
      continue;
    }
    ++hits[*image[id]];
  }
  for (VertexId o = 0; o < oracle.vertices.size(); ++o)
    if (hits[o] != 1)
      bijection.fail(fmt::format("oracle vertex {} is hit {} times", oracle.vertices[o].weight.to_string(), hits[o]));
  bijection.detail = fmt::format("{} complex vertices, {} oracle vertices", c.vertices.size(), oracle.vertices.size());

  CheckResult degrees{"oracle degrees"};
  for (VertexId id = 0; id < c.vertices.size(); ++id)
    if (image[id] && oracle.vertices[*image[id]].degree != c.vertices[id].s)
      degrees.fail(fmt::format("{} maps to oracle degree {}", describe(c, id), oracle.vertices[*image[id]].degree));

  CheckResult arrows{"oracle arrows"};
  std::set<std::pair<VertexId, VertexId>> mapped;
  for (const auto& a : c.arrows) {
    if (!image[a.src] || !image[a.dst])
      continue;
    mapped.emplace(*image[a.src], *image[a.dst]);
  }
  std::set<std::pair<VertexId, VertexId>> expected;
  for (const auto& a : oracle.arrows)
    expected.emplace(a.src, a.dst);
  for (const auto& [s, t] : mapped)
    if (!expected.count({s, t}))
      arrows.fail(fmt::format("complex arrow {} -> {} is not an oracle arrow", oracle.vertices[s].weight.to_string(),
                              oracle.vertices[t].weight.to_string()));
  for (const auto& [s, t] : expected)
    if (!mapped.count({s, t}))
      arrows.fail(fmt::format("oracle arrow {} -> {} is missing from the complex",
                              oracle.vertices[s].weight.to_string(), oracle.vertices[t].weight.to_string()));
  if (mapped.size() != c.arrows.size())
    arrows.fail(fmt::format("{} complex arrows collapse to {} oracle pairs", c.arrows.size(), mapped.size()));
  arrows.detail = fmt::format("{} arrows", c.arrows.size());

  return VerificationReport{{std::move(bijection), std::move(degrees), std::move(arrows)}};
}

std::optional<int> min_total_degree(const LabeledDiagram& labeled) {
  std::optional<int> best;
  for (VertexId id = 0; id < labeled.labels.size(); ++id) {
    if (labeled.labels[id].vanishes())
      continue;
    const int total = labeled.diagram.vertices[id].p + *labeled.labels[id].q;
    if (!best || total < *best)
      best = total;
  }
  return best;
}

bool shift_check(const LabeledDiagram& labeled, const SingularityProfile& profile) {
  const auto best = min_total_degree(labeled);
  return best && *best == profile.l * profile.a();
}

CheckResult check_jump_law(const SingularComplex& c) {
  CheckResult result{"jump law"};
  for (const auto& a : c.arrows) {
    const int drop = c.vertices[a.src].q - c.vertices[a.dst].q;
    if (a.steps - 1 != drop)
      result.fail(fmt::format("{} -> {}: {} steps but label drop {}", describe(c, a.src), describe(c, a.dst),
                              a.steps, drop));
  }
  return result;
}

CheckResult check_grading(const SingularComplex& c) {
  CheckResult result{"grading"};
  for (VertexId id = 0; id < c.vertices.size(); ++id)
    if (c.vertices[id].s < 0 || c.vertices[id].s > c.profile.top_degree())
      result.fail(fmt::format("{} outside 0..{}", describe(c, id), c.profile.top_degree()));
  for (const auto& a : c.arrows)
    if (c.vertices[a.dst].s != c.vertices[a.src].s + 1)
      result.fail(fmt::format("{} -> {} does not raise s by one", describe(c, a.src), describe(c, a.dst)));
  return result;
}

CheckResult check_orders(const SingularComplex& c, const LabeledDiagram& labeled) {
  CheckResult result{"operator orders"};
  const auto& rel = labeled.diagram.vertices;
  for (const auto& a : c.arrows) {
    const auto& from = rel[c.vertices[a.src].base];
    const auto& to = rel[c.vertices[a.dst].base];
    const auto r = static_cast<std::size_t>(a.direction - 1);
    const int drop = from.g2[r] - to.g2[r];
    if (a.order <= 0 || a.order != drop || a.order != sum_of(from.g2) - sum_of(to.g2))
      result.fail(fmt::format("{} -> {}: order {} but block drop {}", describe(c, a.src), describe(c, a.dst),
                              a.order, drop));
    if (a.standard != (a.steps == 1))
      result.fail(fmt::format("{} -> {}: standard flag disagrees with {} steps", describe(c, a.src),
                              describe(c, a.dst), a.steps));
  }
  return result;
}

namespace {

template <class ArrowRange>
std::vector<PathCount> count_paths(std::size_t vertex_count, const ArrowRange& arrows) {
  std::vector<std::vector<VertexId>> out(vertex_count);
  for (const auto& a : arrows)
    out[a.src].push_back(a.dst);
  std::vector<PathCount> counts;
  for (VertexId src = 0; src < vertex_count; ++src) {
    std::map<VertexId, int> reach;
    for (VertexId mid : out[src])
      for (VertexId dst : out[mid])
        ++reach[dst];
    for (const auto& [dst, n] : reach)
      counts.push_back({src, dst, n});
  }
  return counts;
}

} // namespace

std::vector<PathCount> two_step_path_counts(const SingularComplex& c) {
  return count_paths(c.vertices.size(), c.arrows);
}

std::vector<PathCount> two_step_path_counts(const RegularDiagram& d) {
  return count_paths(d.vertices.size(), d.arrows);
}

CheckResult check_diamond_pairing(const SingularComplex& c) {
  CheckResult result{"diamond pairing"};
  for (const auto& pc : two_step_path_counts(c))
    if (pc.count != 2)
      result.fail(fmt::format("{} -> {}: {} length-2 paths", describe(c, pc.src), describe(c, pc.dst), pc.count));
  return result;
}

CheckResult check_interval_law(const SingularComplex& c) {
  CheckResult result{"diamonds"};
  const RegularDiagram oracle = oracle_diagram(c.profile);
  const auto image = image_map(c, oracle);

  std::map<std::pair<VertexId, VertexId>, int> expected;
  for (const auto& pc : two_step_path_counts(oracle))
    expected[{pc.src, pc.dst}] = pc.count;

  std::size_t matched = 0;
  int squares = 0;
  for (const auto& pc : two_step_path_counts(c)) {
    if (pc.count > 2)
      result.fail(fmt::format("{} -> {}: {} length-2 paths", describe(c, pc.src), describe(c, pc.dst), pc.count));
    if (pc.count == 2)
      ++squares;
    if (!image[pc.src] || !image[pc.dst]) {
      result.fail(fmt::format("{} -> {}: endpoint outside the oracle", describe(c, pc.src), describe(c, pc.dst)));
      continue;
    }
    auto it = expected.find({*image[pc.src], *image[pc.dst]});
    if (it == expected.end() || it->second != pc.count)
      result.fail(fmt::format("{} -> {}: {} paths, oracle has {}", describe(c, pc.src), describe(c, pc.dst),
                              pc.count, it == expected.end() ? 0 : it->second));
    else
      ++matched;
  }
  if (matched != expected.size())
    result.fail(fmt::format("{} oracle intervals, {} matched", expected.size(), matched));
  result.detail = fmt::format("{} squares", squares);
  return result;
}

VerificationReport verify(const LabeledDiagram& labeled, const SingularComplex& c) {
  VerificationReport report = oracle_check(c, labeled.profile());

  CheckResult shift{"shift"};
  const auto best = min_total_degree(labeled);
  const int expected = labeled.profile().l * labeled.profile().a();
  shift.detail = best ? fmt::format("min p+q={}", *best) : std::string("no labeled vertex");
  if (!shift_check(labeled, labeled.profile()))
    shift.fail(fmt::format("min p+q is {}, expected {}", best ? std::to_string(*best) : "undefined", expected));
  report.checks.push_back(std::move(shift));

  report.checks.push_back(check_grading(c));
  report.checks.push_back(check_jump_law(c));
  report.checks.push_back(check_orders(c, labeled));
  report.checks.push_back(check_interval_law(c));
  return report;
}

std::vector<std::vector<int>> stein_family(std::span<const int> I, int k) {
  const int l = static_cast<int>(I.size());
  std::vector<std::vector<int>> family;
  if (l == 0 || l > k)
    return family;

  auto matches = [&](const std::vector<int>& J) {
    for (int r = 1; r <= l; ++r) {
      const auto ri = static_cast<std::size_t>(r - 1);
      if (!std::equal(J.begin(), J.begin() + r - 1, I.begin()))
        continue;
      const int lower = r == 1 ? 0 : I[ri - 1];
      if (J[ri] <= lower || J[ri] >= I[ri])
        continue;
      const bool tail_ok = std::all_of(J.begin() + r, J.end(), [&](int j) {
        return std::find(I.begin() + r - 1, I.end(), j) != I.end();
      });
      if (tail_ok)
        return true;
    }
    return false;
  };

  std::vector<int> J(static_cast<std::size_t>(l));
  std::iota(J.begin(), J.end(), 1);
  while (true) {
    if (matches(J))
      family.push_back(J);
    int t = l - 1;
    while (t >= 0 && J[static_cast<std::size_t>(t)] == k - l + t + 1)
      --t;
    if (t < 0)
      break;
    ++J[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < l; ++u)
      J[static_cast<std::size_t>(u)] = J[static_cast<std::size_t>(u - 1)] + 1;
  }
  return family;
}

int stein_cover_count(std::span<const int> I, int l, int k) {
  const bool increasing = std::adjacent_find(I.begin(), I.end(), std::greater_equal<>{}) == I.end();
  if (static_cast<int>(I.size()) != l || !increasing || (l > 0 && (I.front() < 1 || I.back() > k)))
    throw input_error(input_errc::invalid_input,
                      fmt::format("index set {} must be {} increasing entries of 1..{}",
                                  format_groups({I}), l, k));
  const int count = sum_of(I) - l * (l + 1) / 2;
  const auto brute = stein_family(I, k).size();
  if (static_cast<std::size_t>(count) != brute)
    throw invariant_violation(fmt::format("index set {}: formula gives {}, enumeration finds {}",
                                          format_groups({I}), count, brute));
  return count;
}

} // namespace sbgg
