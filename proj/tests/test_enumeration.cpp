#include <gtest/gtest.h>

#include <bit>
#include <cmath>

#include "test_util.hpp"
#include "wsf/error.hpp"
#include "wsf/graph_catalog.hpp"
#include "wsf/sampling.hpp"

using namespace wsf;
using namespace wsf::testing;

TEST(Enumeration, Triangle) {
  const SpanningDistribution d = enumerate_spanning_trees(cycle_graph(3));
  EXPECT_EQ(d.trees.size(), 3u);
  EXPECT_DOUBLE_EQ(d.normalizer, 3.0);
}

TEST(Enumeration, CayleyK4) {
  const SpanningDistribution d = enumerate_spanning_trees(complete_graph(4));
  EXPECT_EQ(d.trees.size(), 16u);
  const SpanningDistribution d5 = enumerate_spanning_trees(complete_graph(5));
  EXPECT_EQ(d5.trees.size(), 125u);
}

TEST(Enumeration, PathWeight) {
  const Network p(4, {{0, 1, 2.0}, {1, 2, 3.0}, {2, 3, 0.5}});
  const SpanningDistribution d = enumerate_spanning_trees(p);
  EXPECT_EQ(d.trees.size(), 1u);
  EXPECT_DOUBLE_EQ(d.normalizer, 3.0);
}

TEST(Enumeration, NormalizerIsMatrixTreeDeterminant) {
  RngStream rng(3, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const Network g = random_network(7, 0.35, rng, 0.5, 3.0);
    const SpanningDistribution d = enumerate_spanning_trees(g);
    EXPECT_NEAR(d.normalizer, weighted_tree_count(g), 1e-9 * d.normalizer);
    for (const auto& t : d.trees) EXPECT_EQ(std::popcount(t.edges), g.vertex_count() - 1);
  }
}

TEST(Enumeration, EveryTreeIsAcyclicAndSpanning) {
  for (const SimpleGraph& s : connected_graphs_by_vertices(5)) {
    const Network g = s.to_network();
    const SpanningDistribution d = enumerate_spanning_trees(g);
    for (const auto& t : d.trees) {
      UnionFind uf(g.vertex_count());
      for (EdgeId e = 0; e < g.edge_count(); ++e)
        if ((t.edges >> e) & 1u) EXPECT_TRUE(uf.unite(g.edge(e).u, g.edge(e).v));
    }
    EXPECT_NEAR(static_cast<double>(d.trees.size()), weighted_tree_count(g), 1e-9);
  }
}

TEST(Enumeration, Limits) {
  EXPECT_THROW(enumerate_spanning_trees(complete_graph(8), 24), ResourceError);
  const Network split(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  EXPECT_THROW(enumerate_spanning_trees(split), DisconnectedGraph);
}
