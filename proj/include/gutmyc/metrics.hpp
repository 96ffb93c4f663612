#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gutmyc/graph.hpp"

namespace gutmyc {

// Exact hop distances of a connected graph, row-major n x n.
class DistanceMatrix {
 public:
  using Distance = std::uint32_t;

  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0) {}

  std::size_t order() const { return n_; }
  Distance at(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  std::span<const Distance> row(Vertex u) const { return {d_.data() + static_cast<std::size_t>(u) * n_, n_}; }
  std::span<Distance> row(Vertex u) { return {d_.data() + static_cast<std::size_t>(u) * n_, n_}; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Distance> d_;
};

struct IndexReport {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t diameter = 0;
  std::int64_t wiener = 0;
  std::int64_t zagreb1 = 0;
  std::int64_t zagreb2 = 0;
  std::int64_t degree_distance = 0;
  std::int64_t gutman = 0;

  friend bool operator==(const IndexReport&, const IndexReport&) = default;
};

// The kernels below run one BFS source (or one matrix row) per OpenMP
// iteration and reduce per-row partial sums in row order, so results never
// depend on the thread count. Distance operations require a connected graph
// and throw DisconnectedGraph otherwise.

DistanceMatrix distance_matrix(const Graph& g);
std::int64_t diameter(const DistanceMatrix& dm);
std::int64_t wiener(const DistanceMatrix& dm);
std::int64_t zagreb1(const Graph& g);
// Edge-sum form of M1: sum over edges of deg(u) + deg(v).
std::int64_t zagreb1_edge_form(const Graph& g);
std::int64_t zagreb2(const Graph& g);
std::int64_t degree_distance(const Graph& g, const DistanceMatrix& dm);
std::int64_t gutman(const Graph& g, const DistanceMatrix& dm);

// All indices from a single distance-matrix pass.
IndexReport index_report(const Graph& g);

// Single-threaded reference implementations of the same contracts, kept for
// testing and benchmarking the parallel kernels.
namespace serial {

DistanceMatrix distance_matrix(const Graph& g);
std::int64_t wiener(const DistanceMatrix& dm);
std::int64_t degree_distance(const Graph& g, const DistanceMatrix& dm);
std::int64_t gutman(const Graph& g, const DistanceMatrix& dm);
IndexReport index_report(const Graph& g);

}  // namespace serial

}  // namespace gutmyc
