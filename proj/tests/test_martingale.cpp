#include <gtest/gtest.h>

#include <algorithm>

#include "test_util.hpp"
#include "wsf/electrical.hpp"
#include "wsf/error.hpp"
#include "wsf/graph_catalog.hpp"
#include "wsf/martingale.hpp"
#include "wsf/sampling.hpp"

using namespace wsf;
using namespace wsf::testing;

namespace {

struct TreeLaw {
  std::vector<EdgeMask> trees;  // over the edge ids of g
  std::vector<double> prob;
};

// Law of WSF_o as edge sets of g: the UST of g with o and the wired vertex merged.
TreeLaw wsf_o_law(const Network& g, VertexId o) {
  std::vector<Edge> edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].label = static_cast<std::int64_t>(i);
  const Network labeled(g.vertex_count(), edges, g.wired_vertex());
  const VertexId merge[] = {o, *g.wired_vertex()};
  const Network merged = contract(labeled, merge).network;
  const SpanningDistribution d = enumerate_spanning_trees(merged);
  TreeLaw law;
  for (std::size_t i = 0; i < d.trees.size(); ++i) {
    EdgeMask m = 0;
    for (EdgeId e = 0; e < merged.edge_count(); ++e)
      if ((d.trees[i].edges >> e) & 1u) m |= EdgeMask{1} << merged.edge(e).label;
    law.trees.push_back(m);
    law.prob.push_back(d.probability(i));
  }
  return law;
}

// M = EC(S, wired; g \ E) computed from scratch.
double m_value(const Network& g, VertexId o, EdgeMask tree, const std::vector<EdgeId>& e_set) {
  UnionFind uf(g.vertex_count());
  for (EdgeId e : e_set)
    if ((tree >> e) & 1u) uf.unite(g.edge(e).u, g.edge(e).v);
  std::vector<VertexId> s;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (uf.find(v) == uf.find(o)) s.push_back(v);
  const VertexId w[] = {*g.wired_vertex()};
  return effective_conductance_tolerant(delete_edges(g, e_set), s, w);
}

Network grid_2x2_wired() {
  // Vertices 0 1 / 2 3, each with two edges to the wired vertex 4.
  std::vector<Edge> e{{0, 1, 1.0}, {0, 2, 1.0}, {1, 3, 1.0}, {2, 3, 1.0}};
  for (int v = 0; v < 4; ++v) {
    e.push_back({v, 4, 1.0});
    e.push_back({v, 4, 1.0});
  }
  return Network(5, e, VertexId{4});
}

}  // namespace

TEST(MartingaleOracle, ProbabilitiesMatchEnumeration) {
  RngStream rng(1, 0);
  for (int trial = 0; trial < 8; ++trial) {
    const Network base = random_network(6, 0.3, rng, 0.5, 2.0);
    const Network g = with_wired(base, 5);
    MartingaleOracle oracle(g, 0);
    const TreeLaw law = wsf_o_law(g, 0);
    const auto& interior = oracle.interior_edges();
    const int k = static_cast<int>(interior.size());
    std::uint32_t keys = 1;
    for (int i = 0; i < k; ++i) keys *= 3;
    for (std::uint32_t key = 0; key < keys; ++key) {
      double want = 0.0;
      for (std::size_t t = 0; t < law.trees.size(); ++t) {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
          const int dgt = MartingaleOracle::digit(key, i);
          const bool in = (law.trees[t] >> interior[i]) & 1u;
          ok = dgt == 0 || (dgt == 1) == in;
        }
        if (ok) want += law.prob[t];
      }
      ASSERT_NEAR(oracle.probability(key), want, 1e-10) << "key " << key;
    }
  }
}

TEST(MartingaleCheck, EqualSetsGiveZero) {
  const Network g = grid_2x2_wired();
  const EdgeId e[] = {0, 1};
  const MartingaleCheck c = martingale_check_exact(g, 0, e, e);
  EXPECT_EQ(c.max_discrepancy, 0.0);
  EXPECT_FALSE(c.rows.empty());
}

TEST(MartingaleCheck, WiredTriangle) {
  const Network g(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}, VertexId{2});
  const EdgeId e1[] = {0};
  const MartingaleCheck c = martingale_check_exact(g, 0, {}, e1);
  ASSERT_EQ(c.rows.size(), 1u);
  EXPECT_LE(c.max_discrepancy, 1e-9);
  const VertexId a[] = {0}, b[] = {2};
  EXPECT_NEAR(c.rows[0].m0, effective_conductance(g, a, b), 1e-12);
}

TEST(MartingaleCheck, Grid2x2AgainstEnumeration) {
  const Network g = grid_2x2_wired();
  const EdgeId e0[] = {0}, e1[] = {0, 1};
  const MartingaleCheck c = martingale_check_exact(g, 0, e0, e1);
  EXPECT_LE(c.max_discrepancy, 1e-9);
  const TreeLaw law = wsf_o_law(g, 0);
  const std::vector<EdgeId> e0v(std::begin(e0), std::end(e0)), e1v(std::begin(e1), std::end(e1));
  for (const MartingaleRow& row : c.rows) {
    double mass = 0.0, sum = 0.0;
    for (std::size_t t = 0; t < law.trees.size(); ++t) {
      bool match = true;
      for (EdgeId e : row.present) match = match && ((law.trees[t] >> e) & 1u);
      for (EdgeId e : row.absent) match = match && !((law.trees[t] >> e) & 1u);
      if (!match) continue;
      mass += law.prob[t];
      sum += law.prob[t] * m_value(g, 0, law.trees[t], e1v);
    }
    EXPECT_NEAR(mass, row.probability, 1e-12);
    EXPECT_NEAR(sum / mass, row.expected_m1, 1e-10);
    EdgeMask mask = 0;
    for (EdgeId e : row.present) mask |= EdgeMask{1} << e;
    EXPECT_NEAR(m_value(g, 0, mask, e0v), row.m0, 1e-10);
  }
}

TEST(MartingaleCheck, RandomGraphsAgainstEnumeration) {
  RngStream rng(2, 0);
  for (int trial = 0; trial < 6; ++trial) {
    const Network base = random_network(6, 0.3, rng, 0.5, 3.0);
    const Network g = with_wired(base, 5);
    MartingaleOracle probe(g, 0);
    const auto& in = probe.interior_edges();
    if (in.size() < 3) continue;
    const std::vector<EdgeId> e0{in[0]}, e1{in[0], in[1], in[2]};
    const MartingaleCheck c = martingale_check_exact(g, 0, e0, e1);
    EXPECT_LE(c.max_discrepancy, 1e-9);
    const TreeLaw law = wsf_o_law(g, 0);
    for (const MartingaleRow& row : c.rows) {
      double mass = 0.0, sum = 0.0;
      for (std::size_t t = 0; t < law.trees.size(); ++t) {
        bool match = true;
        for (EdgeId e : row.present) match = match && ((law.trees[t] >> e) & 1u);
        for (EdgeId e : row.absent) match = match && !((law.trees[t] >> e) & 1u);
        if (!match) continue;
        mass += law.prob[t];
        sum += law.prob[t] * m_value(g, 0, law.trees[t], e1);
      }
      EXPECT_NEAR(sum / mass, row.m0, 1e-9);
    }
  }
}

TEST(MartingaleCheck, RejectsBadSets) {
  const Network g = grid_2x2_wired();
  const EdgeId e0[] = {0, 1}, e1[] = {0};
  EXPECT_THROW(martingale_check_exact(g, 0, e0, e1), std::invalid_argument);
  const EdgeId boundary[] = {4};
  EXPECT_THROW(martingale_check_exact(g, 0, {}, boundary), std::invalid_argument);
  EXPECT_THROW(MartingaleOracle(g, 4), std::invalid_argument);
}

TEST(MartingaleSweep, SmallCatalog) {
  const MartingaleSweep s = martingale_catalog_sweep(4);
  EXPECT_GT(s.graphs, 5);
  EXPECT_LE(s.max_discrepancy, 1e-9);
  EXPECT_GT(s.configurations, 0);
}
