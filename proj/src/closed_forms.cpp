#include "gutmyc/closed_forms.hpp"

#include <numeric>
#include <stdexcept>

#include "gutmyc/checked.hpp"
#include "gutmyc/errors.hpp"
#include "gutmyc/formats.hpp"

namespace gutmyc {

namespace {

using Kind = VertexRole::Kind;

void require_audit_domain(const Graph& g) {
  if (g.order() < 2) throw PreconditionError("closed-form audit requires n >= 2");
  if (!is_connected(g)) throw PreconditionError("closed-form audit requires a connected graph");
}

CaseBreakdown make_breakdown(Target t, const std::array<Exact, kPairClassCount>& cases) {
  CaseBreakdown b;
  b.target = t;
  for (std::size_t k = 0; k < kPairClassCount; ++k) b.subtotal[k] = cases[k].value();
  return b;
}

struct Sym {
  Exact n, m, M1, M2, DD, Gut;
  explicit Sym(const GraphParameters& p)
      : n(p.n), m(p.m), M1(p.zagreb1), M2(p.zagreb2), DD(p.degree_distance), Gut(p.gutman) {}
};

}  // namespace

GraphParameters GraphParameters::from(const IndexReport& r) {
  GraphParameters p;
  p.n = r.n;
  p.m = r.m;
  p.zagreb1 = r.zagreb1;
  p.zagreb2 = r.zagreb2;
  p.degree_distance = r.degree_distance;
  p.gutman = r.gutman;
  p.wiener = r.wiener;
  return p;
}

void GraphParameters::validate() const {
  if (n < 0 || m < 0) throw PreconditionError("n and m must be nonnegative");
  const Exact N(n), M(m);
  if (M > halve(N * (N - 1))) throw PreconditionError("m exceeds C(n, 2)");
  if (Exact(zagreb1) > Exact(2) * M * (N - 1)) throw PreconditionError("M1 exceeds 2m(n-1)");
}

std::string_view to_string(PairClass c) {
  switch (c) {
    case PairClass::apex_shadow:
      return "apex_shadow";
    case PairClass::apex_original:
      return "apex_original";
    case PairClass::shadow_shadow:
      return "shadow_shadow";
    case PairClass::original_original:
      return "original_original";
    case PairClass::twin:
      return "twin";
    case PairClass::cross_distinct:
      break;
  }
  return "cross_distinct";
}

PairClass classify(VertexRole a, VertexRole b) {
  if (a == b) throw PreconditionError("a vertex does not form a pair with itself");
  if (a.kind > b.kind) std::swap(a, b);
  if (b.kind == Kind::apex) return a.kind == Kind::shadow ? PairClass::apex_shadow : PairClass::apex_original;
  if (a.kind == Kind::shadow) return PairClass::shadow_shadow;
  if (b.kind == Kind::original) return PairClass::original_original;
  return a.i == b.i ? PairClass::twin : PairClass::cross_distinct;
}

std::int64_t CaseBreakdown::total() const {
  Exact t;
  for (std::int64_t s : subtotal) t += s;
  return t.value();
}

LemmaCheck lemma_degree_sum(const Graph& g) {
  if (g.order() < 2) throw PreconditionError("lemma requires n >= 2");
  const auto deg = g.degrees();
  Exact lhs;
  for (std::size_t i = 0; i < deg.size(); ++i)
    for (std::size_t j = i + 1; j < deg.size(); ++j) lhs += Exact(deg[i]) + Exact(deg[j]);
  const Exact rhs = (Exact(g.order()) - 1) * 2 * Exact(g.size());
  return {lhs.value(), rhs.value()};
}

LemmaCheck lemma_degree_product(const Graph& g) {
  if (g.order() < 2) throw PreconditionError("lemma requires n >= 2");
  const auto deg = g.degrees();
  Exact lhs;
  for (std::size_t i = 0; i < deg.size(); ++i)
    for (std::size_t j = i + 1; j < deg.size(); ++j) lhs += Exact(deg[i]) * Exact(deg[j]);
  const Exact m(g.size());
  const Exact rhs = halve(Exact(4) * m * m - Exact(zagreb1(g)));
  return {lhs.value(), rhs.value()};
}

std::int64_t thm5_printed(const GraphParameters& p) {
  const Sym s(p);
  const Exact v = Exact(6) * s.Gut + Exact(3) * s.M1 + s.DD + Exact(2) * (s.m + s.n) * (Exact(2) * s.m + s.n) +
                  s.n * (Exact(6) * s.m - 1) + Exact(6) * s.m;
  return v.value();
}

CaseBreakdown thm5_cases_printed(const GraphParameters& p) {
  const Sym s(p);
  const Exact two(2), four(4);
  return make_breakdown(Target::mu, {
                                        s.n * s.n + two * s.m,
                                        Exact(8) * s.n * s.m,
                                        s.n * (s.n - 1) + four * (s.n - 1) * s.m + four * s.m * s.m - s.M1,
                                        four * s.Gut,
                                        four * (two * s.m + s.M1),
                                        two * (s.DD + two * s.Gut),
                                    });
}

std::int64_t thm5_case6_aggregate_reading(const GraphParameters& p) {
  const Sym s(p);
  return (s.DD + Exact(2) * s.Gut).value();
}

std::int64_t thm6_printed(const GraphParameters& p) {
  const Sym s(p);
  const Exact n = s.n, m = s.m;
  const Exact n2 = n * n;
  // Twice the printed expression.
  const Exact twice = Exact(8) * s.M2 - (Exact(20) * n + 5) * s.M1 + Exact(16) * n2 * n2 - Exact(4) * n2 * n +
                      (n2 - n) - Exact(8) * n * m * (Exact(2) * n2 - Exact(2) * n + 3) + Exact(4) * m * (n + 1) +
                      Exact(52) * m * m;
  return halve(twice).value();
}

CaseBreakdown thm6_cases_printed(const GraphParameters& p) {
  if (p.n < 2) throw PreconditionError("thm6 case expressions require n >= 2");
  const Sym s(p);
  const Exact n = s.n, m = s.m, M1 = s.M1, M2 = s.M2;
  const Exact two(2), four(4);
  const Exact n2 = n * n;
  const Exact two_m = two * m;
  const Exact pairs = halve(n * (n - 1));                  // C(n, 2)
  const Exact product_pairs_x4 = Exact(8) * m * m - two * M1;  // 4 (2m^2 - M1/2)

  const Exact case1 = two * n * ((two * n - 1) * n - two_m);
  const Exact case2 = two * n * (n2 - two_m);
  const Exact case3 =
      halve(two * (pairs * (two * n - 1) * (two * n - 1) - (two * n - 1) * (n - 1) * two_m + two * m * m) - M1);
  const Exact case4 = (four * n2 * pairs - four * n * (n - 1) * two_m + product_pairs_x4) +
                      (four * n2 * m - four * n * M1 + four * M2);
  const Exact case5 = two * n2 * (two * n - 1) - (Exact(6) * n - 2) * two_m + two * M1;
  const Exact case6 = (two * n * (two * n - 1) * n * (n - 1) - two * n * (n - 1) * two_m -
                       two * (two * n - 1) * (n - 1) * two_m + product_pairs_x4) +
                      (two * n * (two * n - 1) * two_m - two * n * M1 - two * (two * n - 1) * M1 + product_pairs_x4);
  return make_breakdown(Target::mu_bar, {case1, case2, case3, case4, case5, case6});
}

namespace {

CaseBreakdown class_sums(const Graph& derived, const DistanceMatrix& dm, std::size_t n, Target target) {
  std::array<Exact, kPairClassCount> sums{};
  const auto deg = derived.degrees();
  for (Vertex u = 0; u < derived.order(); ++u) {
    const VertexRole a = VertexRole::at(u, n);
    for (Vertex v = u + 1; v < derived.order(); ++v) {
      const auto k = static_cast<std::size_t>(classify(a, VertexRole::at(v, n)));
      sums[k] += Exact(dm.at(u, v)) * Exact(deg[u]) * Exact(deg[v]);
    }
  }
  return make_breakdown(target, sums);
}

}  // namespace

CaseBreakdown direct_class_sums(const Graph& g, Target target) {
  require_audit_domain(g);
  const Graph derived = build_target(g, target);
  return class_sums(derived, distance_matrix(derived), g.order(), target);
}

AuditRecord audit(const Graph& g, Target target) {
  require_audit_domain(g);
  const IndexReport base = index_report(g);
  const Graph derived = build_target(g, target);
  const DistanceMatrix dm = distance_matrix(derived);

  AuditRecord rec;
  rec.graph_id = write_graph6(g);
  rec.params = GraphParameters::from(base);
  rec.target = target;
  rec.brute_force = gutman(derived, dm);
  rec.direct_cases = class_sums(derived, dm, g.order(), target);
  if (rec.direct_cases.total() != rec.brute_force)
    throw std::logic_error("pair classes do not partition the vertex pairs of " + rec.graph_id);

  if (target == Target::mu) {
    rec.printed_cases = thm5_cases_printed(rec.params);
    rec.printed_theorem = thm5_printed(rec.params);
    rec.case6_aggregate_reading = thm5_case6_aggregate_reading(rec.params);
    rec.diameter_ok = base.diameter == 2;
  } else {
    rec.printed_cases = thm6_cases_printed(rec.params);
    rec.printed_theorem = thm6_printed(rec.params);
    rec.diameter_ok = true;
  }
  rec.delta = (Exact(rec.brute_force) - rec.printed_theorem).value();
  rec.printed_cases_delta = (Exact(rec.brute_force) - rec.printed_cases.total()).value();
  for (std::size_t k = 0; k < kPairClassCount; ++k)
    rec.case_deltas[k] = (Exact(rec.direct_cases.subtotal[k]) - rec.printed_cases.subtotal[k]).value();
  return rec;
}

}  // namespace gutmyc
