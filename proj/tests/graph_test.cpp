#include "gutmyc/graph.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "corpus.hpp"
#include "gutmyc/errors.hpp"

namespace gutmyc {
namespace {

using testing::connected_corpus;

Graph p3() { return build_graph(3, {{0, 1}, {1, 2}}); }

TEST(BuildGraphTest, PathOnThreeVertices) {
  const Graph g = p3();
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(BuildGraphTest, DuplicatesCollapse) {
  const Graph g = build_graph(3, {{0, 1}, {1, 0}});
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.degree(2), 0u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
}

TEST(BuildGraphTest, RejectsOutOfRangeEndpoint) {
  try {
    build_graph(2, {{0, 2}});
    FAIL() << "expected InvalidGraph";
  } catch (const InvalidGraph& e) {
    EXPECT_NE(std::string(e.what()).find("(0,2)"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
  }
}

TEST(BuildGraphTest, RejectsLoop) { EXPECT_THROW(build_graph(2, {{1, 1}}), InvalidGraph); }

TEST(BuildGraphTest, EmptyAndSingleVertex) {
  EXPECT_EQ(build_graph(0, {}).order(), 0u);
  EXPECT_EQ(build_graph(1, {}).size(), 0u);
}

TEST(BuildGraphTest, NeighborListsSorted) {
  const Graph g = build_graph(5, {{4, 2}, {0, 2}, {2, 3}, {1, 2}});
  const auto nb = g.neighbors(2);
  EXPECT_EQ(std::vector<Vertex>(nb.begin(), nb.end()), (std::vector<Vertex>{0, 1, 3, 4}));
}

TEST(DegreeTest, Examples) {
  EXPECT_EQ(p3().degree(1), 2u);
  EXPECT_EQ(generate(Family::complete, 4).degree(0), 3u);
  EXPECT_EQ(generate(Family::star, 4).degree(0), 3u);
  EXPECT_THROW(p3().degree(3), PreconditionError);
}

TEST(ComplementTest, Examples) {
  EXPECT_EQ(complement(generate(Family::complete, 3)), build_graph(3, {}));
  EXPECT_EQ(complement(p3()), build_graph(3, {{0, 2}}));
  EXPECT_EQ(complement(generate(Family::cycle, 4)), build_graph(4, {{0, 2}, {1, 3}}));
  EXPECT_EQ(complement(build_graph(0, {})), build_graph(0, {}));
}

TEST(ComplementTest, InvolutionAndEdgeCount) {
  for (const Graph& g : testing::all_labeled_graphs(5)) {
    const Graph c = complement(g);
    EXPECT_EQ(c.size(), 10 - g.size());
    EXPECT_EQ(complement(c), g);
  }
}

TEST(MycielskianTest, OfK2IsC5) {
  const Graph mu = mycielskian(generate(Family::complete, 2));
  EXPECT_EQ(mu.order(), 5u);
  EXPECT_EQ(mu.size(), 5u);
  EXPECT_TRUE(testing::isomorphic(mu, generate(Family::cycle, 5)));
}

TEST(MycielskianTest, OfP3) {
  const Graph mu = mycielskian(p3());
  EXPECT_EQ(mu.order(), 7u);
  EXPECT_EQ(mu.size(), 9u);
  const std::size_t n = 3;
  EXPECT_TRUE(mu.has_edge(VertexRole::original(0).index(n), VertexRole::shadow(1).index(n)));
  EXPECT_FALSE(mu.has_edge(VertexRole::shadow(0).index(n), VertexRole::shadow(1).index(n)));
}

TEST(MycielskianTest, OfK1IsShadowApexEdgePlusIsolatedOriginal) {
  const Graph mu = mycielskian(build_graph(1, {}));
  EXPECT_EQ(mu, build_graph(3, {{1, 2}}));
  EXPECT_FALSE(is_connected(mu));
}

TEST(MycielskianTest, StructuralInvariantsOnCorpus) {
  for (const Graph& g : connected_corpus(1, 6)) {
    const Graph mu = mycielskian(g);
    const std::size_t n = g.order();
    ASSERT_EQ(mu.order(), 2 * n + 1);
    EXPECT_EQ(mu.size(), 3 * g.size() + n);
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j)
        EXPECT_FALSE(mu.has_edge(VertexRole::shadow(i).index(n), VertexRole::shadow(j).index(n)));
    const Vertex apex = VertexRole::apex().index(n);
    EXPECT_EQ(mu.degree(apex), n);
    for (Vertex i = 0; i < n; ++i) EXPECT_FALSE(mu.has_edge(apex, i));
    const auto deg = mu.degrees();
    EXPECT_EQ(std::accumulate(deg.begin(), deg.end(), std::size_t{0}), 2 * mu.size());
  }
}

TEST(VertexRoleTest, LabellingConvention) {
  const std::size_t n = 4;
  EXPECT_EQ(VertexRole::original(2).index(n), 2u);
  EXPECT_EQ(VertexRole::shadow(2).index(n), 6u);
  EXPECT_EQ(VertexRole::apex().index(n), 8u);
  for (Vertex v = 0; v <= 2 * n; ++v) EXPECT_EQ(VertexRole::at(v, n).index(n), v);
  EXPECT_THROW(VertexRole::shadow(4).index(n), PreconditionError);
  EXPECT_THROW(VertexRole::at(9, n), PreconditionError);
  EXPECT_EQ(VertexRole::shadow(3).name(), "x_3");
  EXPECT_EQ(VertexRole::original(0).name(), "v_0");
  EXPECT_EQ(VertexRole::apex().name(), "x");
}

TEST(IsConnectedTest, Examples) {
  EXPECT_TRUE(is_connected(p3()));
  EXPECT_FALSE(is_connected(build_graph(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(is_connected(build_graph(1, {})));
  EXPECT_TRUE(is_connected(build_graph(0, {})));
}

TEST(GenerateTest, Families) {
  EXPECT_EQ(generate(Family::cycle, 4), build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  EXPECT_EQ(generate(Family::complete, 4).size(), 6u);
  EXPECT_EQ(generate(Family::path, 4), build_graph(4, {{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(generate(Family::star, 4), build_graph(4, {{0, 1}, {0, 2}, {0, 3}}));
  EXPECT_EQ(generate(Family::path, 1).order(), 1u);
}

TEST(GenerateTest, InvalidParameters) {
  EXPECT_THROW(generate(Family::cycle, 2), PreconditionError);
  EXPECT_THROW(generate(Family::path, 0), PreconditionError);
  EXPECT_THROW(generate(Family::random, 5), PreconditionError);
  EXPECT_THROW(generate(Family::random, 5, 1.5, 1), PreconditionError);
  EXPECT_THROW(generate(Family::random, 5, -0.1, 1), PreconditionError);
}

TEST(GenerateTest, RandomIsDeterministic) {
  const Graph a = generate(Family::random, 20, 0.5, 7);
  const Graph b = generate(Family::random, 20, 0.5, 7);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, generate(Family::random, 20, 0.5, 8));
  EXPECT_EQ(generate(Family::random, 10, 0.0, 3).size(), 0u);
  EXPECT_EQ(generate(Family::random, 10, 1.0, 3).size(), 45u);
}

// Frozen from the documented rule (mt19937_64, one draw per pair, keep iff
// (w >> 11) < p * 2^53), recomputed here without the library.
TEST(GenerateTest, RandomMatchesDocumentedRule) {
  std::mt19937_64 engine(7);
  std::vector<Edge> expected;
  for (Vertex u = 0; u < 12; ++u)
    for (Vertex v = u + 1; v < 12; ++v)
      if (static_cast<double>(engine() >> 11) < 0.3 * 9007199254740992.0) expected.push_back({u, v});
  EXPECT_EQ(generate(Family::random, 12, 0.3, 7), build_graph(12, expected));
}

TEST(GenerateTest, FamilyNames) {
  for (Family f : {Family::path, Family::cycle, Family::star, Family::complete, Family::random})
    EXPECT_EQ(parse_family(to_string(f)), f);
  EXPECT_FALSE(parse_family("wheel"));
}

}  // namespace
}  // namespace gutmyc
