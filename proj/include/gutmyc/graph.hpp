#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gutmyc {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite simple undirected graph on vertices 0..n-1. Immutable after
// construction. Edges are stored normalized (u < v) and sorted; neighbour
// lists are sorted as well.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const;

  // Throws PreconditionError when v is out of range.
  std::size_t degree(Vertex v) const;
  std::vector<std::size_t> degrees() const;

  bool has_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  friend Graph build_graph(std::size_t n, std::span<const Edge> edges);

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

// Collapses duplicates (in either orientation). Throws InvalidGraph on a
// loop or an endpoint outside [0, n).
Graph build_graph(std::size_t n, std::span<const Edge> edges);
Graph build_graph(std::size_t n, std::initializer_list<Edge> edges);

Graph complement(const Graph& g);

// Vertex of the Mycielskian mu(G) of an n-vertex graph G. Fixed labelling:
// Original(i) -> i, Shadow(i) -> n + i, Apex -> 2n.
struct VertexRole {
  enum class Kind : std::uint8_t { original, shadow, apex };

  Kind kind = Kind::apex;
  Vertex i = 0;

  static constexpr VertexRole original(Vertex i) { return {Kind::original, i}; }
  static constexpr VertexRole shadow(Vertex i) { return {Kind::shadow, i}; }
  static constexpr VertexRole apex() { return {Kind::apex, 0}; }

  // Position in mu(G); throws PreconditionError if i >= n.
  Vertex index(std::size_t n) const;
  // Inverse of index(); throws PreconditionError if index > 2n.
  static VertexRole at(Vertex index, std::size_t n);

  // "x", "x_i" or "v_i" (zero-based i).
  std::string name() const;

  friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

// mu(G): 2n+1 vertices, 3m+n edges.
Graph mycielskian(const Graph& g);

enum class Target : std::uint8_t { mu, mu_bar };
std::string_view to_string(Target t);
std::optional<Target> parse_target(std::string_view s);

// mu(G) or the complement of mu(G).
Graph build_target(const Graph& g, Target t);

// BFS from vertex 0. The empty and single-vertex graphs are connected.
bool is_connected(const Graph& g);

enum class Family : std::uint8_t { path, cycle, star, complete, random };
std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view s);

// Random graphs use std::mt19937_64 seeded with the given seed. Pairs {i,j},
// i < j, are visited in lexicographic order; one 64-bit word w is drawn per
// pair and the edge is kept iff (w >> 11) < p * 2^53. mt19937_64 output is
// fixed by the C++ standard, so the edge set depends only on (n, p, seed).
Graph generate(Family family, std::size_t n, std::optional<double> p = std::nullopt,
               std::optional<std::uint64_t> seed = std::nullopt);

// Draws one G(n, p) graph from an engine that the caller keeps, so
// consecutive calls continue the same stream.
Graph random_graph(std::size_t n, double p, std::mt19937_64& engine);

}  // namespace gutmyc
