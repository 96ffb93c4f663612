#include "gutmyc/structure_laws.hpp"

#include <algorithm>
#include <utility>

#include "gutmyc/errors.hpp"
#include "gutmyc/formats.hpp"

namespace gutmyc {

namespace {

using Kind = VertexRole::Kind;

void check_role(const VertexRole& r, std::size_t n) { (void)r.index(n); }

// Orders a pair so that a.kind <= b.kind (original < shadow < apex).
std::pair<VertexRole, VertexRole> ordered(VertexRole a, VertexRole b) {
  if (a.kind > b.kind) std::swap(a, b);
  return {a, b};
}

void require_laws_domain(const Graph& g) {
  if (g.order() < 2) throw PreconditionError("structure laws require n >= 2");
  if (!is_connected(g)) throw PreconditionError("structure laws require a connected graph");
}

}  // namespace

std::int64_t mu_degree(const Graph& g, VertexRole role) {
  const std::size_t n = g.order();
  if (n < 1) throw PreconditionError("mu_degree requires n >= 1");
  check_role(role, n);
  switch (role.kind) {
    case Kind::apex:
      return static_cast<std::int64_t>(n);
    case Kind::shadow:
      return 1 + static_cast<std::int64_t>(g.degree(role.i));
    case Kind::original:
      break;
  }
  return 2 * static_cast<std::int64_t>(g.degree(role.i));
}

std::int64_t mu_distance(const DistanceMatrix& dm_g, VertexRole a, VertexRole b) {
  const std::size_t n = dm_g.order();
  check_role(a, n);
  check_role(b, n);
  if (a == b) return 0;
  auto [lo, hi] = ordered(a, b);
  switch (lo.kind) {
    case Kind::apex:
      return 0;  // unreachable: two apex roles are equal
    case Kind::shadow:
      return hi.kind == Kind::apex ? 1 : 2;
    case Kind::original:
      break;
  }
  switch (hi.kind) {
    case Kind::apex:
      return 2;
    case Kind::original:
      return std::min<std::int64_t>(dm_g.at(lo.i, hi.i), 4);
    case Kind::shadow:
      break;
  }
  if (lo.i == hi.i) return 2;
  return std::min<std::int64_t>(dm_g.at(lo.i, hi.i), 3);
}

std::int64_t mu_bar_degree(const Graph& g, VertexRole role) {
  const auto n = static_cast<std::int64_t>(g.order());
  if (n < 1) throw PreconditionError("mu_bar_degree requires n >= 1");
  check_role(role, g.order());
  switch (role.kind) {
    case Kind::apex:
      return n;
    case Kind::shadow:
      return 2 * n - 1 - static_cast<std::int64_t>(g.degree(role.i));
    case Kind::original:
      break;
  }
  return 2 * n - 2 * static_cast<std::int64_t>(g.degree(role.i));
}

std::int64_t mu_bar_distance(const Graph& g, VertexRole a, VertexRole b) {
  check_role(a, g.order());
  check_role(b, g.order());
  if (a == b) return 0;
  auto [lo, hi] = ordered(a, b);
  switch (lo.kind) {
    case Kind::apex:
      return 0;
    case Kind::shadow:
      return hi.kind == Kind::apex ? 2 : 1;
    case Kind::original:
      break;
  }
  if (hi.kind == Kind::apex) return 1;
  if (hi.kind == Kind::shadow && lo.i == hi.i) return 1;
  return g.has_edge(lo.i, hi.i) ? 2 : 1;
}

LawReport verify_structure(const Graph& g, Target target) {
  require_laws_domain(g);
  return check_structure(g, build_target(g, target), target);
}

LawReport check_structure(const Graph& g, const Graph& derived, Target target) {
  require_laws_domain(g);
  const std::size_t n = g.order();
  if (derived.order() != 2 * n + 1)
    throw PreconditionError("candidate has " + std::to_string(derived.order()) + " vertices, expected " +
                            std::to_string(2 * n + 1));
  if (!is_connected(derived))
    throw PreconditionError("the " + std::string(to_string(target)) + " graph is disconnected");

  LawReport rep;
  rep.graph_id = write_graph6(g);
  rep.target = target;
  rep.n = n;

  const bool mu = target == Target::mu;
  const DistanceMatrix dm_g = distance_matrix(g);
  const DistanceMatrix dm = distance_matrix(derived);
  const std::size_t order = derived.order();

  for (Vertex u = 0; u < order; ++u) {
    const VertexRole role = VertexRole::at(u, n);
    const std::int64_t predicted = mu ? mu_degree(g, role) : mu_bar_degree(g, role);
    const auto actual = static_cast<std::int64_t>(derived.degree(u));
    if (predicted != actual) rep.degree_mismatches.push_back({role, predicted, actual});
    ++rep.checked_pairs;
  }
  for (Vertex u = 0; u < order; ++u) {
    const VertexRole a = VertexRole::at(u, n);
    for (Vertex v = u + 1; v < order; ++v) {
      const VertexRole b = VertexRole::at(v, n);
      const std::int64_t predicted = mu ? mu_distance(dm_g, a, b) : mu_bar_distance(g, a, b);
      const std::int64_t actual = dm.at(u, v);
      if (predicted != actual) rep.distance_mismatches.push_back({a, b, predicted, actual});
      ++rep.checked_pairs;
    }
  }
  return rep;
}

}  // namespace gutmyc
