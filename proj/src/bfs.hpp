#pragma once

#include <vector>

#include "gutmyc/errors.hpp"
#include "gutmyc/graph.hpp"
#include "gutmyc/metrics.hpp"

namespace gutmyc::detail {

inline constexpr DistanceMatrix::Distance kUnreached = ~DistanceMatrix::Distance{0};

// Fills row with hop counts from source; queue is scratch of size n.
// Returns the number of vertices reached.
inline std::size_t bfs_row(const Graph& g, Vertex source, std::span<DistanceMatrix::Distance> row,
                           std::vector<Vertex>& queue) {
  std::fill(row.begin(), row.end(), kUnreached);
  row[source] = 0;
  std::size_t head = 0;
  std::size_t tail = 0;
  queue[tail++] = source;
  while (head < tail) {
    const Vertex u = queue[head++];
    const auto next = row[u] + 1;
    for (Vertex w : g.neighbors(u)) {
      if (row[w] == kUnreached) {
        row[w] = next;
        queue[tail++] = w;
      }
    }
  }
  return tail;
}

inline void throw_unreached(std::span<const DistanceMatrix::Distance> row, Vertex source) {
  for (std::size_t v = 0; v < row.size(); ++v)
    if (row[v] == kUnreached) throw DisconnectedGraph(source, static_cast<Vertex>(v));
}

inline void require_nonempty(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("distance matrix requires at least one vertex");
}

}  // namespace gutmyc::detail
