#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "test_util.hpp"
#include "wsf/electrical.hpp"
#include "wsf/experiments.hpp"
#include "wsf/graph_catalog.hpp"
#include "wsf/lattice.hpp"
#include "wsf/sampling.hpp"

using namespace wsf;
using namespace wsf::testing;

namespace {

EdgeMask mask_of_tree(const Forest& f) {
  EdgeMask m = 0;
  for (EdgeId e : f.edge_ids()) m |= EdgeMask{1} << e;
  return m;
}

}  // namespace

TEST(Wilson, TreeInputIsReturned) {
  const Network p = path_graph(6);
  RngStream rng(1, 0);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(wilson_ust(p, 3, rng).edge_count(), 5);
}

TEST(Wilson, RejectsDisconnected) {
  const Network g(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  EXPECT_THROW(WilsonSampler{g}, std::runtime_error);
}

TEST(Wilson, UnitTriangleUniform) {
  const KirchhoffReport r = kirchhoff_validation(cycle_graph(3), 300000, 5, Execution::serial, 1);
  for (const auto& e : r.edges) EXPECT_NEAR(e.expected, 2.0 / 3.0, 1e-12);
  EXPECT_LT(r.max_abs_z, 4.0);
  EXPECT_LT(r.tree_tv, 0.005);
}

TEST(Wilson, WeightedTriangle) {
  const Network t(3, {{0, 1, 2.0}, {1, 2, 1.0}, {2, 0, 1.0}});
  RngStream rng(2, 0);
  const int n = 200000;
  int both_heavy = 0;  // tree {01, 12}
  for (int i = 0; i < n; ++i) {
    RngStream s(2, i);
    const EdgeMask m = mask_of_tree(wilson_ust(t, 0, s));
    both_heavy += m == 0b011;
  }
  const double p = 0.4, sigma = std::sqrt(p * (1 - p) / n);
  EXPECT_NEAR(static_cast<double>(both_heavy) / n, p, 3 * sigma);
}

TEST(Wilson, ExactOnSmallCatalogWithWeights) {
  // Every connected graph with at most 5 edges, conductances in {1, 2, 3}.
  int index = 0;
  for (const SimpleGraph& s : connected_graphs_by_edges(5)) {
    RngStream pick(77, index);
    std::vector<Edge> edges;
    for (auto [u, v] : s.edges) edges.push_back({u, v, 1.0 + pick.bounded(3)});
    const Network g(s.vertex_count, edges);
    const KirchhoffReport r = kirchhoff_validation(g, 1'000'000, 100 + index, Execution::parallel, 2);
    EXPECT_LE(r.tree_tv, 0.005) << "graph " << index;
    ++index;
  }
  EXPECT_EQ(index, 22);
}

TEST(Wilson, RootIndependence) {
  const Network box = build_lattice_box({2, 1, BoundaryMode::wired});
  const int n = 100000;
  std::vector<int> a(box.edge_count(), 0), b(box.edge_count(), 0);
  WilsonSampler w(box);
  std::vector<EdgeId> parents;
  for (int i = 0; i < n; ++i) {
    RngStream r1(9, i), r2(10, i);
    w.sample(0, r1, parents);
    for (EdgeId e : parents)
      if (e != kNoEdge) ++a[e];
    w.sample(*box.wired_vertex(), r2, parents);
    for (EdgeId e : parents)
      if (e != kNoEdge) ++b[e];
  }
  for (EdgeId e = 0; e < box.edge_count(); ++e) {
    const double pa = static_cast<double>(a[e]) / n, pb = static_cast<double>(b[e]) / n;
    const double p = (pa + pb) / 2, sigma = std::sqrt(2 * p * (1 - p) / n);
    EXPECT_LE(std::abs(pa - pb), 4 * sigma + 1e-12) << "edge " << e;
  }
}

TEST(Wilson, SerialAndParallelAgree) {
  const Network box = build_lattice_box({2, 2, BoundaryMode::wired});
  const auto a = kirchhoff_validation(box, 2000, 4, Execution::serial, 1);
  const auto b = kirchhoff_validation(box, 2000, 4, Execution::parallel, 3);
  for (std::size_t i = 0; i < a.edges.size(); ++i) EXPECT_EQ(a.edges[i].observed, b.edges[i].observed);
}

TEST(Conditioning, TriangleExamples) {
  const Network t = cycle_graph(3);
  const ConditionedNetwork in = condition_on_edge(t, 0, true);
  EXPECT_EQ(in.network.vertex_count(), 2);
  EXPECT_EQ(in.network.edge_count(), 2);
  const ConditionedNetwork out = condition_on_edge(t, 0, false);
  EXPECT_EQ(out.network.edge_count(), 2);
  EXPECT_TRUE(out.network.is_connected());
  // P[f in T | e in T] = Kirchhoff probability in G/e = 1/2.
  EXPECT_NEAR(kirchhoff_edge_probability(in.network, 0), 0.5, 1e-12);
  const EdgeId e0[] = {0}, e1[] = {1};
  EXPECT_NEAR(configuration_probability(t, std::vector<EdgeId>{0, 1}, {}) / configuration_probability(t, e0, {}),
              0.5, 1e-12);
  EXPECT_NEAR(configuration_probability(t, e0, e1), 1.0 / 3.0, 1e-12);
  EXPECT_THROW(condition_on_edge(path_graph(3), 0, false), std::invalid_argument);
}

TEST(Conditioning, ChainRuleReproducesLaw) {
  const Network t(3, {{0, 1, 2.0}, {1, 2, 1.0}, {2, 0, 1.0}});
  const SpanningDistribution law = enumerate_spanning_trees(t);
  std::map<EdgeMask, int> counts;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    RngStream rng(6, i);
    const auto in = sample_by_conditioning(t, rng);
    EdgeMask m = 0;
    for (EdgeId e = 0; e < 3; ++e)
      if (in[e]) m |= EdgeMask{1} << e;
    ++counts[m];
  }
  double tv = 0.0;
  for (std::size_t i = 0; i < law.trees.size(); ++i)
    tv += std::abs(static_cast<double>(counts[law.trees[i].edges]) / n - law.probability(i));
  EXPECT_LE(tv / 2, 0.005);
}

TEST(Conditioning, ConfigurationProbabilitiesMatchEnumeration) {
  RngStream rng(13, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const Network g = random_network(6, 0.4, rng, 1.0, 3.0);
    const SpanningDistribution law = enumerate_spanning_trees(g);
    const EdgeId present[] = {0}, absent[] = {static_cast<EdgeId>(g.edge_count() - 1)};
    double want = 0.0;
    for (std::size_t i = 0; i < law.trees.size(); ++i) {
      const EdgeMask m = law.trees[i].edges;
      if ((m & 1u) && !((m >> absent[0]) & 1u)) want += law.probability(i);
    }
    EXPECT_NEAR(configuration_probability(g, present, absent), want, 1e-10);
  }
}

TEST(Wired, LineFlagsAndTriangle) {
  const Network line = build_lattice_box({1, 1, BoundaryMode::wired});
  for (int i = 0; i < 50; ++i) {
    RngStream rng(3, i);
    const WiredForest w = sample_wired(line, rng);
    for (char flag : w.infinite_direction) EXPECT_TRUE(flag);
    EXPECT_EQ(w.truncation_radius, 1);
  }
  // A wired vertex is just a vertex: same law as the plain UST.
  const Network tri = with_wired(cycle_graph(3), 2);
  const KirchhoffReport r = kirchhoff_validation(tri, 100000, 8, Execution::serial, 1);
  EXPECT_LT(r.max_abs_z, 4.0);
}

TEST(Wired, Z2ComponentsAllReachWired) {
  const Network box = build_lattice_box({2, 8, BoundaryMode::wired});
  for (int i = 0; i < 20; ++i) {
    RngStream rng(4, i);
    const WiredForest w = sample_wired(box, rng);
    EXPECT_TRUE(w.tree.is_spanning_tree());
    for (char flag : w.infinite_direction) EXPECT_TRUE(flag);
  }
}

TEST(WsfO, ComponentMatchesBoxForest) {
  const int d = 2, r = 5;
  const std::vector<int> o{1, -2};
  RootWiredSampler sampler(d, r, o);
  const Network& box = sampler.box();
  for (int i = 0; i < 100; ++i) {
    RngStream rng(5, i);
    const RootWiredSample s = sampler.sample(rng);
    EXPECT_TRUE(s.tree.is_spanning_tree());
    // Oracle: the tree's box edges split the box into the part hanging
    // from o and the part hanging from the wired vertex.
    UnionFind uf(box.vertex_count());
    for (std::int64_t label : s.tree.labels()) {
      const Edge& e = box.edge(static_cast<EdgeId>(label));
      uf.unite(e.u, e.v);
    }
    std::vector<VertexId> want;
    for (VertexId v = 0; v < box.vertex_count(); ++v)
      if (uf.find(v) == uf.find(sampler.origin())) want.push_back(v);
    std::vector<VertexId> got = s.origin_component;
    EXPECT_EQ(got.front(), sampler.origin());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, want);
    EXPECT_NE(uf.find(sampler.origin()), uf.find(*box.wired_vertex()));
    EXPECT_EQ(s.origin_edges.size() + 1, s.origin_component.size());
  }
}

TEST(WsfO, LineComponentStaysInBox) {
  const std::vector<int> o{0};
  for (int i = 0; i < 50; ++i) {
    RngStream rng(6, i);
    const RootWiredSample s = sample_wsf_o({1, 6, BoundaryMode::wired}, o, rng);
    EXPECT_LE(s.max_sup_norm, 6);
    EXPECT_LE(s.origin_component.size(), 13u);
  }
}

TEST(WsfO, EdgeMarginalsMatchMergedNetwork) {
  const std::vector<int> o{0, 0};
  RootWiredSampler sampler(2, 2, o);
  const Network& m = sampler.merged();
  const int n = 50000;
  std::vector<int> hits(m.edge_count(), 0);
  for (int i = 0; i < n; ++i) {
    RngStream rng(7, i);
    const RootWiredSample s = sampler.sample(rng);
    for (EdgeId e : s.tree.edge_ids()) ++hits[e];
  }
  for (EdgeId e = 0; e < m.edge_count(); ++e) {
    const double p = kirchhoff_edge_probability(m, e), sigma = std::sqrt(p * (1 - p) / n);
    EXPECT_NEAR(static_cast<double>(hits[e]) / n, p, 5 * sigma + 1e-12);
  }
}
