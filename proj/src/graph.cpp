#include "gutmyc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "gutmyc/errors.hpp"

namespace gutmyc {

namespace {

std::string pair_text(Vertex u, Vertex v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

}  // namespace

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (v >= n_) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  return std::span<const Vertex>(adjacency_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::size_t Graph::degree(Vertex v) const {
  if (v >= n_) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  return offsets_[v + 1] - offsets_[v];
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(n_);
  for (std::size_t v = 0; v < n_; ++v) out[v] = offsets_[v + 1] - offsets_[v];
  return out;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_ || u == v) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  if (n > std::numeric_limits<Vertex>::max() / 2 - 1)
    throw InvalidGraph("vertex count " + std::to_string(n) + " too large");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n)
      throw InvalidGraph("edge " + pair_text(e.u, e.v) + ": endpoint out of range [0, " + std::to_string(n) + ")");
    if (e.u == e.v) throw InvalidGraph("edge " + pair_text(e.u, e.v) + ": loop");
    g.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.adjacency_.resize(2 * g.edges_.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v), so each list comes out sorted once the
  // smaller-endpoint entries (v side) are written before the larger ones.
  for (const Edge& e : g.edges_) g.adjacency_[fill[e.v]++] = e.u;
  for (const Edge& e : g.edges_) g.adjacency_[fill[e.u]++] = e.v;
  return g;
}

Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Edge> out;
  out.reserve(n * (n - (n > 0)) / 2 - g.size());
  for (Vertex u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    auto it = std::upper_bound(nb.begin(), nb.end(), u);
    for (Vertex v = u + 1; v < n; ++v) {
      if (it != nb.end() && *it == v) {
        ++it;
        continue;
      }
      out.push_back({u, v});
    }
  }
  return build_graph(n, out);
}

Vertex VertexRole::index(std::size_t n) const {
  switch (kind) {
    case Kind::original:
    case Kind::shadow:
      if (i >= n) throw PreconditionError("role " + name() + " out of range for n = " + std::to_string(n));
      return static_cast<Vertex>(kind == Kind::original ? i : n + i);
    case Kind::apex:
      break;
  }
  return static_cast<Vertex>(2 * n);
}

VertexRole VertexRole::at(Vertex index, std::size_t n) {
  if (index < n) return original(index);
  if (index < 2 * n) return shadow(static_cast<Vertex>(index - n));
  if (index == 2 * n) return apex();
  throw PreconditionError("vertex " + std::to_string(index) + " is not in a Mycielskian of order " +
                          std::to_string(2 * n + 1));
}

std::string VertexRole::name() const {
  switch (kind) {
    case Kind::original:
      return "v_" + std::to_string(i);
    case Kind::shadow:
      return "x_" + std::to_string(i);
    case Kind::apex:
      break;
  }
  return "x";
}

Graph mycielskian(const Graph& g) {
  const std::size_t n = g.order();
  const auto shadow = [n](Vertex i) { return static_cast<Vertex>(n + i); };
  std::vector<Edge> out;
  out.reserve(3 * g.size() + n);
  for (const Edge& e : g.edges()) {
    out.push_back(e);
    out.push_back({e.u, shadow(e.v)});
    out.push_back({e.v, shadow(e.u)});
  }
  const auto apex = static_cast<Vertex>(2 * n);
  for (Vertex i = 0; i < n; ++i) out.push_back({shadow(i), apex});
  return build_graph(2 * n + 1, out);
}

std::string_view to_string(Target t) { return t == Target::mu ? "mu" : "mu_bar"; }

std::optional<Target> parse_target(std::string_view s) {
  if (s == "mu") return Target::mu;
  if (s == "mu_bar") return Target::mu_bar;
  return std::nullopt;
}

Graph build_target(const Graph& g, Target t) {
  Graph mu = mycielskian(g);
  return t == Target::mu ? mu : complement(mu);
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::queue<Vertex> frontier;
  seen[0] = 1;
  frontier.push(0);
  std::size_t reached = 1;
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == n;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::path:
      return "path";
    case Family::cycle:
      return "cycle";
    case Family::star:
      return "star";
    case Family::complete:
      return "complete";
    case Family::random:
      break;
  }
  return "random";
}

std::optional<Family> parse_family(std::string_view s) {
  for (Family f : {Family::path, Family::cycle, Family::star, Family::complete, Family::random})
    if (to_string(f) == s) return f;
  return std::nullopt;
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& engine) {
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("edge probability must lie in [0, 1]");
  const auto threshold = static_cast<std::uint64_t>(std::ldexp(p, 53));
  std::vector<Edge> out;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if ((engine() >> 11) < threshold) out.push_back({u, v});
  return build_graph(n, out);
}

Graph generate(Family family, std::size_t n, std::optional<double> p, std::optional<std::uint64_t> seed) {
  if (n < 1) throw PreconditionError("generator requires n >= 1");
  std::vector<Edge> out;
  const auto last = static_cast<Vertex>(n - 1);
  switch (family) {
    case Family::path:
      for (Vertex i = 0; i < last; ++i) out.push_back({i, i + 1});
      break;
    case Family::cycle:
      if (n < 3) throw PreconditionError("cycle requires n >= 3");
      for (Vertex i = 0; i < last; ++i) out.push_back({i, i + 1});
      out.push_back({0, last});
      break;
    case Family::star:
      for (Vertex i = 1; i < n; ++i) out.push_back({0, i});
      break;
    case Family::complete:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) out.push_back({u, v});
      break;
    case Family::random: {
      if (!p || !seed) throw PreconditionError("random family requires p and seed");
      std::mt19937_64 engine(*seed);
      return random_graph(n, *p, engine);
    }
  }
  return build_graph(n, out);
}

}  // namespace gutmyc
