#pragma once

#include "sbgg/bbw.hpp"
#include "sbgg/hasse.hpp"
#include "sbgg/weights.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sbgg {

/// A numerically labeled relative vertex, placed in chain degree
/// s = p + q - l(k - l).
struct SingularVertex {
  VertexId base = 0; // id in the relative diagram
  int p = 0;
  int q = 0;
  int s = 0;
  OrbitElement pushed_weight;  // (g1·g2 sorted | g3)
  BarredWeight bundle_weight;  // pushed_weight - rho

  friend bool operator==(const SingularVertex&, const SingularVertex&) = default;
};

/// Differential d_i in one direction: the source and target are separated
/// by steps - 1 vanishing vertices along the same direction.
struct JumpArrow {
  VertexId src = 0;
  VertexId dst = 0;
  int direction = 0;
  int steps = 0;
  int order = 0;
  bool standard = false;

  friend bool operator==(const JumpArrow&, const JumpArrow&) = default;
};

struct SingularComplex {
  SingularityProfile profile;
  std::vector<SingularVertex> vertices;               // ordered by base id
  std::vector<JumpArrow> arrows;                      // ordered by (src, direction)
  std::vector<std::vector<VertexId>> chain_spaces;    // C_0 .. C_top

  std::optional<VertexId> find_base(VertexId base) const;

  friend bool operator==(const SingularComplex&, const SingularComplex&) = default;
};

SingularComplex assemble(const LabeledDiagram& labeled);

/// Image of a complex vertex in the regular diagram on J with k' = k - l.
OrbitElement enright_shelton_image(const SingularVertex& v, const SingularityProfile& profile);

/// Regular Hasse diagram on the non-repeated values with k' = k - l.
RegularDiagram oracle_diagram(const SingularityProfile& profile);

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::string detail;
  std::vector<std::string> counterexamples;

  void fail(std::string counterexample) {
    passed = false;
    counterexamples.push_back(std::move(counterexample));
  }
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  const CheckResult* find(std::string_view name) const;
};

/// Compares the complex with oracle_diagram(profile): the image map is a
/// bijection, preserves degrees, and matches arrows in both directions.
VerificationReport oracle_check(const SingularComplex& c, const SingularityProfile& profile);

/// Smallest p + q over numerically labeled vertices.
std::optional<int> min_total_degree(const LabeledDiagram& labeled);
/// min(p + q) == l(k - l).
bool shift_check(const LabeledDiagram& labeled, const SingularityProfile& profile);

/// steps - 1 == q(src) - q(dst) for every arrow.
CheckResult check_jump_law(const SingularComplex& c);
/// s(dst) == s(src) + 1 and 0 <= s <= top degree.
CheckResult check_grading(const SingularComplex& c);
/// order == drop of the moving block sum, and it is positive.
CheckResult check_orders(const SingularComplex& c, const LabeledDiagram& labeled);

struct PathCount {
  VertexId src = 0;
  VertexId dst = 0;
  int count = 0;
};
/// Directed length-2 path counts for every pair joined by at least one path.
std::vector<PathCount> two_step_path_counts(const SingularComplex& c);
std::vector<PathCount> two_step_path_counts(const RegularDiagram& d);

/// Literal pairing rule: every pair two degrees apart is joined by 0 or 2 paths.
CheckResult check_diamond_pairing(const SingularComplex& c);
/// Interval rule: every pair two degrees apart is joined by at most 2 paths,
/// and the counts agree with the oracle's under the image bijection.
CheckResult check_interval_law(const SingularComplex& c);

/// Everything the `check` command runs.
VerificationReport verify(const LabeledDiagram& labeled, const SingularComplex& c);

/// Size of the index family attached to I = {i_1 < ... < i_l} in {1..k},
/// computed as sum(I) - l(l+1)/2 and cross-checked against stein_family.
int stein_cover_count(std::span<const int> I, int l, int k);
/// Index sets {i_1..i_{r-1}, j_r, j_{r+1}..j_l} with i_{r-1} < j_r < i_r and
/// {j_{r+1}..j_l} drawn from {i_r..i_l}, found by scanning every l-subset of {1..k}.
std::vector<std::vector<int>> stein_family(std::span<const int> I, int k);

} // namespace sbgg
