#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gutmyc/graph.hpp"
#include "gutmyc/metrics.hpp"

namespace gutmyc {

// Predicted degree of a vertex of mu(G): n for the apex, 1 + deg(v_i) for
// shadow x_i, 2 deg(v_i) for original v_i.
std::int64_t mu_degree(const Graph& g, VertexRole role);

// Predicted distance in mu(G) from the distances of G (n >= 2, connected).
// Originals: d_G capped at 4. Original/shadow with i != j: d_G capped at 3.
// Twins v_i, x_i, shadow pairs and apex/original: 2. Apex/shadow: 1.
std::int64_t mu_distance(const DistanceMatrix& dm_g, VertexRole a, VertexRole b);

// Predicted degree in the complement of mu(G): n, 2n - 1 - deg(v_i),
// 2n - 2 deg(v_i).
std::int64_t mu_bar_degree(const Graph& g, VertexRole role);

// Predicted distance in the complement of mu(G); every value is 1 or 2 and
// depends only on adjacency in G.
std::int64_t mu_bar_distance(const Graph& g, VertexRole a, VertexRole b);

struct DegreeMismatch {
  VertexRole role;
  std::int64_t predicted = 0;
  std::int64_t actual = 0;
};

struct DistanceMismatch {
  VertexRole a;
  VertexRole b;
  std::int64_t predicted = 0;
  std::int64_t actual = 0;
};

struct LawReport {
  std::string graph_id;  // graph6 of the input
  Target target = Target::mu;
  std::size_t n = 0;
  std::vector<DegreeMismatch> degree_mismatches;
  std::vector<DistanceMismatch> distance_mismatches;
  // (2n+1) degree checks plus C(2n+1, 2) distance checks.
  std::size_t checked_pairs = 0;

  bool ok() const { return degree_mismatches.empty() && distance_mismatches.empty(); }
};

// Builds the target graph explicitly, recomputes degrees and BFS distances
// and compares every vertex and unordered pair with the predictions above.
// Requires g connected with n >= 2 (PreconditionError otherwise).
LawReport verify_structure(const Graph& g, Target target);

// Compares a given (2n+1)-vertex candidate for the target graph against the
// predictions. verify_structure(g, t) == check_structure(g, build_target(g, t), t).
LawReport check_structure(const Graph& g, const Graph& candidate, Target target);

}  // namespace gutmyc
