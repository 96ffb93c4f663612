#include <algorithm>

#include "bfs.hpp"
#include "gutmyc/checked.hpp"
#include "gutmyc/metrics.hpp"

namespace gutmyc::serial {

DistanceMatrix distance_matrix(const Graph& g) {
  detail::require_nonempty(g);
  const std::size_t n = g.order();
  DistanceMatrix dm(n);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    if (detail::bfs_row(g, s, dm.row(s), queue) != n) detail::throw_unreached(dm.row(s), s);
  }
  return dm;
}

std::int64_t wiener(const DistanceMatrix& dm) {
  Exact total;
  for (Vertex u = 0; u < dm.order(); ++u)
    for (Vertex v = u + 1; v < dm.order(); ++v) total += Exact(dm.at(u, v));
  return total.value();
}

std::int64_t degree_distance(const Graph& g, const DistanceMatrix& dm) {
  Exact total;
  for (Vertex u = 0; u < dm.order(); ++u)
    for (Vertex v = u + 1; v < dm.order(); ++v)
      total += Exact(dm.at(u, v)) * (Exact(g.degree(u)) + Exact(g.degree(v)));
  return total.value();
}

std::int64_t gutman(const Graph& g, const DistanceMatrix& dm) {
  Exact total;
  for (Vertex u = 0; u < dm.order(); ++u)
    for (Vertex v = u + 1; v < dm.order(); ++v)
      total += Exact(dm.at(u, v)) * Exact(g.degree(u)) * Exact(g.degree(v));
  return total.value();
}

IndexReport index_report(const Graph& g) {
  const DistanceMatrix dm = serial::distance_matrix(g);
  IndexReport rep;
  rep.n = static_cast<std::int64_t>(g.order());
  rep.m = static_cast<std::int64_t>(g.size());
  std::int64_t diam = 0;
  for (Vertex u = 0; u < dm.order(); ++u)
    for (Vertex v = u + 1; v < dm.order(); ++v) diam = std::max<std::int64_t>(diam, dm.at(u, v));
  rep.diameter = diam;
  rep.wiener = serial::wiener(dm);
  rep.zagreb1 = gutmyc::zagreb1(g);
  rep.zagreb2 = gutmyc::zagreb2(g);
  rep.degree_distance = serial::degree_distance(g, dm);
  rep.gutman = serial::gutman(g, dm);
  return rep;
}

}  // namespace gutmyc::serial
