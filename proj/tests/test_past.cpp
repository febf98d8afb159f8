#include <gtest/gtest.h>

#include <cmath>

#include "test_util.hpp"
#include "wsf/lattice.hpp"
#include "wsf/past.hpp"
#include "wsf/rng.hpp"
#include "wsf/wilson.hpp"

using namespace wsf;
using namespace wsf::testing;

namespace {

// Descendants of x by following every vertex's parent chain to the root.
std::vector<VertexId> descendants(const Network& g, std::span<const EdgeId> parent, VertexId x) {
  std::vector<VertexId> out;
  const VertexId w = *g.wired_vertex();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v == x || v == w) continue;
    for (VertexId y = v; y != w; y = g.other_end(parent[y], y))
      if (y == x) {
        out.push_back(v);
        break;
      }
  }
  return out;
}

}  // namespace

TEST(Past, LeafHasEmptyPast) {
  // wired(0) - a(1) - x(2)
  const Network g(3, {{0, 1, 1.0}, {1, 2, 1.0}}, VertexId{0});
  const std::vector<EdgeId> parent{kNoEdge, 0, 1};
  const PastSummary q = past_of(g, parent, 2);
  EXPECT_TRUE(q.vertices.empty());
  EXPECT_EQ(q.euclidean_diameter, 0.0);
  EXPECT_EQ(past_of(g, parent, 1).vertices, std::vector<VertexId>{2});
}

TEST(Past, MatchesParentChainOracle) {
  const Network box = build_lattice_box({3, 4, BoundaryMode::wired});
  WilsonSampler w(box);
  PastFinder finder(box);
  std::vector<EdgeId> parent;
  for (int i = 0; i < 30; ++i) {
    RngStream rng(2, i);
    w.sample(*box.wired_vertex(), rng, parent);
    for (VertexId x : {lattice_origin(3, 4), VertexId{0}, VertexId{100}}) {
      const PastSummary q = finder.past_of(parent, x);
      EXPECT_EQ(q.vertices, descendants(box, parent, x));
      bool boundary = false;
      for (VertexId v : q.vertices) boundary = boundary || sup_norm(box.coords(v)) == 4;
      EXPECT_EQ(q.reached_boundary, boundary);
    }
  }
}

TEST(Past, LineLawIsUniformOverCutEdge) {
  // The wired line box is a cycle through the wired vertex; its UST drops a
  // uniform edge. |Q(0)| = k for k = 1..r with probability 2/(2r+2) each,
  // and 0 with probability 2/(2r+2).
  const int r = 4;
  const Network box = build_lattice_box({1, r, BoundaryMode::wired});
  WilsonSampler w(box);
  PastFinder finder(box);
  std::vector<EdgeId> parent;
  const int n = 60000;
  std::vector<int> counts(r + 1, 0);
  for (int i = 0; i < n; ++i) {
    RngStream rng(3, i);
    w.sample(*box.wired_vertex(), rng, parent);
    ++counts[finder.past_of(parent, lattice_origin(1, r)).vertices.size()];
  }
  const double p = 2.0 / (2 * r + 2), sigma = std::sqrt(p * (1 - p) / n);
  for (int k = 0; k <= r; ++k) EXPECT_NEAR(static_cast<double>(counts[k]) / n, p, 4 * sigma) << "k = " << k;
}

TEST(Diameters, AgainstPairwiseScan) {
  RngStream rng(4, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 1 + static_cast<int>(rng.bounded(4));
    const int m = 1 + static_cast<int>(rng.bounded(60));
    std::vector<int> c(d * m);
    for (int& x : c) x = static_cast<int>(rng.bounded(11)) - 5;
    double e = 0.0;
    int l1 = 0, sup = 0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        double s2 = 0.0;
        int a = 0, b = 0;
        for (int k = 0; k < d; ++k) {
          const int diff = std::abs(c[i * d + k] - c[j * d + k]);
          s2 += diff * diff;
          a += diff;
          b = std::max(b, diff);
        }
        e = std::max(e, std::sqrt(s2));
        l1 = std::max(l1, a);
        sup = std::max(sup, b);
      }
    EXPECT_DOUBLE_EQ(euclidean_diameter(d, c), e);
    EXPECT_EQ(l1_diameter(d, c), l1);
    EXPECT_EQ(sup_diameter(d, c), sup);
  }
}

TEST(Past, DiameterWithinBoxDiagonal) {
  const Network box = build_lattice_box({3, 6, BoundaryMode::wired});
  WilsonSampler w(box);
  PastFinder finder(box);
  std::vector<EdgeId> parent;
  for (int i = 0; i < 50; ++i) {
    RngStream rng(5, i);
    w.sample(*box.wired_vertex(), rng, parent);
    const PastSummary q = finder.past_of(parent, lattice_origin(3, 6));
    EXPECT_LE(q.euclidean_diameter, 12 * std::sqrt(3.0));
    EXPECT_LE(q.sup_diameter, q.euclidean_diameter + 1e-12);
    EXPECT_LE(q.euclidean_diameter, q.graph_diameter + 1e-12);
  }
}
