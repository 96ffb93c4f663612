#pragma once

// Closed-form evaluators for the Gutman index of mu(G) (diameter-2 G) and
// of the complement of mu(G), each printed case expression of the two
// derivations, and direct per-class sums on the constructed graph.
//
// Printed expressions are evaluated verbatim. Brute force on the explicit
// graph is the ground truth; differences are reported as deltas and never
// corrected.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "gutmyc/graph.hpp"
#include "gutmyc/metrics.hpp"

namespace gutmyc {

struct GraphParameters {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t zagreb1 = 0;
  std::int64_t zagreb2 = 0;
  std::int64_t degree_distance = 0;
  std::int64_t gutman = 0;
  std::int64_t wiener = 0;

  static GraphParameters from(const IndexReport& r);
  // 0 <= m <= C(n,2) and M1 <= 2m(n-1); throws PreconditionError otherwise.
  void validate() const;
};

// The six pair classes of a Mycielskian-shaped vertex set, in case order.
enum class PairClass : std::uint8_t {
  apex_shadow,        // x, x_i
  apex_original,      // x, v_i
  shadow_shadow,      // x_i, x_j
  original_original,  // v_i, v_j
  twin,               // v_i, x_i
  cross_distinct,     // v_i, x_j with i != j
};
inline constexpr std::size_t kPairClassCount = 6;

std::string_view to_string(PairClass c);
// Class of the distinct roles {a, b}; throws PreconditionError if a == b.
PairClass classify(VertexRole a, VertexRole b);

struct CaseBreakdown {
  Target target = Target::mu;
  std::array<std::int64_t, kPairClassCount> subtotal{};

  std::int64_t operator[](PairClass c) const { return subtotal[static_cast<std::size_t>(c)]; }
  std::int64_t total() const;
};

struct LemmaCheck {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds() const { return lhs == rhs; }
};

// Sum over unordered pairs of deg u + deg v, against (n-1) 2m.
LemmaCheck lemma_degree_sum(const Graph& g);
// Sum over unordered pairs of deg u * deg v, against 2m^2 - M1/2.
LemmaCheck lemma_degree_product(const Graph& g);

// 6 Gut + 3 M1 + DD + 2(m+n)(2m+n) + n(6m-1) + 6m.
std::int64_t thm5_printed(const GraphParameters& p);
// Cases as displayed in the Gut(mu) derivation; case 6 is 2 (DD + 2 Gut).
CaseBreakdown thm5_cases_printed(const GraphParameters& p);
// The case-6 value that the printed aggregate adds up to: DD + 2 Gut.
std::int64_t thm5_case6_aggregate_reading(const GraphParameters& p);

// 4 M2 - (10n + 5/2) M1 + 8n^4 - 2n^3 + (n^2 - n)/2 - 4nm(2n^2 - 2n + 3)
//   + 2m(n+1) + 26m^2, evaluated in halves; throws std::domain_error when
// the result is not an integer.
std::int64_t thm6_printed(const GraphParameters& p);
// Cases as displayed in the Gut(mu_bar) derivation. Requires n >= 2.
CaseBreakdown thm6_cases_printed(const GraphParameters& p);

// Per-class sums of d * deg * deg on the explicitly built target graph.
// Requires g connected, n >= 2.
CaseBreakdown direct_class_sums(const Graph& g, Target target);

struct AuditRecord {
  std::string graph_id;  // graph6 of G
  GraphParameters params;
  Target target = Target::mu;
  std::int64_t brute_force = 0;
  CaseBreakdown direct_cases;
  CaseBreakdown printed_cases;
  std::int64_t printed_theorem = 0;
  // brute_force - printed_theorem.
  std::int64_t delta = 0;
  // brute_force - printed_cases.total().
  std::int64_t printed_cases_delta = 0;
  // direct - printed, per class.
  std::array<std::int64_t, kPairClassCount> case_deltas{};
  // mu only: DD + 2 Gut, the case-6 value implied by the printed aggregate.
  std::optional<std::int64_t> case6_aggregate_reading;
  // mu: diam(G) == 2, the theorem's hypothesis. mu_bar: always true.
  bool diameter_ok = true;
};

// Requires g connected, n >= 2.
AuditRecord audit(const Graph& g, Target target);

}  // namespace gutmyc
