#include "gutmyc/metrics.hpp"

#include <algorithm>
#include <exception>

#include "bfs.hpp"
#include "gutmyc/checked.hpp"

namespace gutmyc {

namespace {

// Runs body(i) for i in [0, count) across OpenMP threads and rethrows the
// first exception on the calling thread.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
  std::exception_ptr failure;
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < total; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(gutmyc_parallel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

struct RowSums {
  Exact wiener;
  Exact degree_distance;
  Exact gutman;
  DistanceMatrix::Distance eccentricity = 0;
};

// Sums over pairs (u, v) with v > u for one row.
RowSums row_sums(const DistanceMatrix& dm, std::span<const std::size_t> deg, Vertex u) {
  RowSums s;
  const auto row = dm.row(u);
  const Exact du(deg[u]);
  Exact w, dd, gut;
  for (std::size_t v = u + 1; v < row.size(); ++v) {
    const Exact d(row[v]);
    const Exact dv(deg[v]);
    w += d;
    dd += d * (du + dv);
    gut += d * du * dv;
    s.eccentricity = std::max(s.eccentricity, row[v]);
  }
  s.wiener = w;
  s.degree_distance = dd;
  s.gutman = gut;
  return s;
}

std::vector<RowSums> all_row_sums(const DistanceMatrix& dm, std::span<const std::size_t> deg) {
  std::vector<RowSums> rows(dm.order());
  parallel_for(dm.order(), [&](std::size_t u) { rows[u] = row_sums(dm, deg, static_cast<Vertex>(u)); });
  return rows;
}

}  // namespace

DistanceMatrix distance_matrix(const Graph& g) {
  detail::require_nonempty(g);
  const std::size_t n = g.order();
  DistanceMatrix dm(n);
  {
    std::vector<Vertex> queue(n);
    if (detail::bfs_row(g, 0, dm.row(0), queue) != n) detail::throw_unreached(dm.row(0), 0);
  }
  if (n > 1) {
    parallel_for(n - 1, [&](std::size_t k) {
      thread_local std::vector<Vertex> queue;
      queue.resize(n);
      const auto source = static_cast<Vertex>(k + 1);
      detail::bfs_row(g, source, dm.row(source), queue);
    });
  }
  return dm;
}

std::int64_t diameter(const DistanceMatrix& dm) {
  DistanceMatrix::Distance best = 0;
  for (Vertex u = 0; u < dm.order(); ++u) {
    const auto row = dm.row(u);
    best = std::max(best, *std::max_element(row.begin(), row.end()));
  }
  return best;
}

std::int64_t wiener(const DistanceMatrix& dm) {
  const std::vector<std::size_t> zeros(dm.order(), 0);
  Exact total;
  for (const RowSums& r : all_row_sums(dm, zeros)) total += r.wiener;
  return total.value();
}

std::int64_t zagreb1(const Graph& g) {
  Exact total;
  for (std::size_t d : g.degrees()) total += Exact(d) * Exact(d);
  return total.value();
}

std::int64_t zagreb1_edge_form(const Graph& g) {
  const auto deg = g.degrees();
  Exact total;
  for (const Edge& e : g.edges()) total += Exact(deg[e.u]) + Exact(deg[e.v]);
  return total.value();
}

std::int64_t zagreb2(const Graph& g) {
  const auto deg = g.degrees();
  Exact total;
  for (const Edge& e : g.edges()) total += Exact(deg[e.u]) * Exact(deg[e.v]);
  return total.value();
}

std::int64_t degree_distance(const Graph& g, const DistanceMatrix& dm) {
  Exact total;
  for (const RowSums& r : all_row_sums(dm, g.degrees())) total += r.degree_distance;
  return total.value();
}

std::int64_t gutman(const Graph& g, const DistanceMatrix& dm) {
  Exact total;
  for (const RowSums& r : all_row_sums(dm, g.degrees())) total += r.gutman;
  return total.value();
}

IndexReport index_report(const Graph& g) {
  const DistanceMatrix dm = distance_matrix(g);
  IndexReport rep;
  rep.n = static_cast<std::int64_t>(g.order());
  rep.m = static_cast<std::int64_t>(g.size());
  Exact w, dd, gut;
  DistanceMatrix::Distance diam = 0;
  for (const RowSums& r : all_row_sums(dm, g.degrees())) {
    w += r.wiener;
    dd += r.degree_distance;
    gut += r.gutman;
    diam = std::max(diam, r.eccentricity);
  }
  rep.diameter = diam;
  rep.wiener = w.value();
  rep.degree_distance = dd.value();
  rep.gutman = gut.value();
  rep.zagreb1 = zagreb1(g);
  rep.zagreb2 = zagreb2(g);
  return rep;
}

}  // namespace gutmyc
