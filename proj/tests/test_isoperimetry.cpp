#include <gtest/gtest.h>

#include <bit>
#include <cmath>

#include "test_util.hpp"
#include "wsf/electrical.hpp"
#include "wsf/error.hpp"
#include "wsf/graph_catalog.hpp"
#include "wsf/isoperimetry.hpp"

using namespace wsf;
using namespace wsf::testing;

namespace {

bool connected_mask(const Network& g, std::uint64_t m) {
  if (m == 0) return false;
  std::uint64_t reach = m & -m;
  for (bool grew = true; grew;) {
    grew = false;
    for (const Edge& e : g.edges()) {
      const bool u = (reach >> e.u) & 1u, v = (reach >> e.v) & 1u;
      if (u != v && ((m >> e.u) & 1u) && ((m >> e.v) & 1u)) {
        reach |= (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
        grew = true;
      }
    }
  }
  return reach == m;
}

double boundary_of(const Network& g, std::uint64_t m) {
  double b = 0.0;
  for (const Edge& e : g.edges())
    if (((m >> e.u) & 1u) != ((m >> e.v) & 1u)) b += e.conductance;
  return b;
}

double pi_of(const Network& g, std::uint64_t m) {
  double p = 0.0;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if ((m >> v) & 1u) p += g.pi(v);
  return p;
}

// Least boundary over connected K with A in K, wired not in K, K != V, pi(K) >= t.
double kappa_oracle(const Network& g, std::uint64_t a, double t) {
  const std::uint64_t all = (std::uint64_t{1} << g.vertex_count()) - 1;
  double best = INFINITY;
  for (std::uint64_t k = 1; k < all; ++k) {
    if ((k & a) != a) continue;
    if (g.wired_vertex() && ((k >> *g.wired_vertex()) & 1u)) continue;
    if (!connected_mask(g, k) || pi_of(g, k) < t) continue;
    best = std::min(best, boundary_of(g, k));
  }
  return best;
}

}  // namespace

TEST(Isoperimetry, FourCycle) {
  const Network g = cycle_graph(4);
  EXPECT_EQ(profile_brute(g, {}, 1.0), 2.0);
  EXPECT_EQ(profile_brute(g, {}, 5.0), 2.0);
  EXPECT_EQ(profile_brute(g, {}, 6.0), 2.0);
  EXPECT_TRUE(std::isinf(profile_brute(g, {}, 6.5)));
}

TEST(Isoperimetry, IncidentConvention) {
  const Network g = path_graph(3);
  ProfileOptions opt;
  opt.convention = PiConvention::incident_edges;
  // {0,1} meets both edges: pi = 2 under the incident convention, 3 oriented.
  EXPECT_EQ(profile_brute(g, {}, 2.0, opt), 1.0);
  EXPECT_TRUE(std::isinf(profile_brute(g, {}, 2.5, opt)));
  EXPECT_EQ(profile_brute(g, {}, 3.0), 1.0);
}

TEST(Isoperimetry, TableMatchesOracle) {
  RngStream rng(11, 0);
  for (int trial = 0; trial < 15; ++trial) {
    const Network base = random_network(7, 0.35, rng, 0.5, 2.0);
    const Network g = trial % 2 ? with_wired(base, 6) : base;
    const VertexId a[] = {static_cast<VertexId>(trial % 3)};
    const std::span<const VertexId> aset = trial % 4 == 0 ? std::span<const VertexId>() : std::span<const VertexId>(a);
    const Profile p = profile_table(g, aset);
    const std::uint64_t amask = aset.empty() ? 0 : std::uint64_t{1} << a[0];
    double prev = 0.0;
    for (double t = 0.25; t < 40.0; t += 0.25) {
      const double want = kappa_oracle(g, amask, t);
      const double got = p.thresholds().empty() ? INFINITY : p(t);
      ASSERT_EQ(std::isinf(got), std::isinf(want)) << "t=" << t;
      if (!std::isinf(want)) ASSERT_NEAR(got, want, 1e-12) << "t=" << t;
      EXPECT_GE(got, prev);
      prev = got;
    }
  }
}

TEST(Isoperimetry, InfiniteVariant) {
  // Path 0-1-2 with 2 wired: K = {1} sees 0 on a finite side.
  const Network g(3, {{0, 1, 1.0}, {1, 2, 1.0}}, VertexId{2});
  const VertexId k1[] = {1};
  EXPECT_EQ(boundary_conductance(g, mask_of(k1), BoundaryVariant::edge), 2.0);
  EXPECT_EQ(boundary_conductance(g, mask_of(k1), BoundaryVariant::infinite), 1.0);
  EXPECT_THROW(boundary_conductance(path_graph(3), 1, BoundaryVariant::infinite), std::invalid_argument);
  EXPECT_EQ(parse_boundary_variant("infinite"), BoundaryVariant::infinite);
  EXPECT_THROW(parse_boundary_variant("inner"), std::invalid_argument);
}

TEST(Isoperimetry, CapIsEnforced) {
  EXPECT_THROW(profile_table(path_graph(20), {}), ResourceError);
}

TEST(FiniteHs, SingleEdge) {
  const FiniteHsResult r = finite_hs_bound(path_graph(2), 0, 1);
  EXPECT_NEAR(r.exact, 1.0, 1e-12);
  EXPECT_NEAR(r.bound, 2.0, 1e-12);
  EXPECT_TRUE(r.holds);
}

TEST(FiniteHs, ParallelEdges) {
  const Network g(2, {{0, 1, 1.0}, {0, 1, 1.0}});
  const FiniteHsResult r = finite_hs_bound(g, 0, 1);
  EXPECT_NEAR(r.exact, 0.5, 1e-12);
  EXPECT_GE(r.bound, 0.5);
}

TEST(FiniteHs, RandomNetworks) {
  RngStream rng(12, 0);
  for (int trial = 0; trial < 30; ++trial) {
    const Network g = random_network(8, 0.3, rng, 0.2, 5.0);
    const FiniteHsResult r = finite_hs_bound(g, 0, 7);
    EXPECT_TRUE(r.holds) << "bound " << r.bound << " exact " << r.exact;
    for (std::size_t i = 1; i < r.s.size(); ++i) EXPECT_GT(r.s[i], r.s[i - 1]);
  }
  EXPECT_THROW(finite_hs_bound(path_graph(3), 1, 1), std::invalid_argument);
}

TEST(GoodSubset, MatchesBruteForce) {
  // 4-cycle 0..3, pendant 4 off vertex 2, wired vertex 5 joined to 3 and 4.
  const Network g(6, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 0, 1.0}, {2, 4, 1.0}, {3, 5, 1.0}, {4, 5, 1.0}},
                  VertexId{5});
  const VertexId k[] = {0};
  const GoodSubsetResult r = good_subset(g, k);
  const std::uint64_t core = 0b1011;  // K and its neighbors 1, 3
  double best = INFINITY;
  std::uint64_t arg = 0;
  for (std::uint64_t l = 1; l < 32; ++l) {
    if ((l & core) != core) continue;
    const double b = boundary_of(g, l);
    if (b < best || (b == best && std::popcount(l) < std::popcount(arg))) {
      best = b;
      arg = l;
    }
  }
  EXPECT_EQ(r.boundary, best);
  EXPECT_EQ(mask_of(r.w), arg);
  EXPECT_TRUE(r.certificate_ok);
  EXPECT_GE(r.worst_ratio, 0.5);
  EXPECT_TRUE(r.connected);
}

TEST(GoodSubset, CertificateOnCatalog) {
  for (const SimpleGraph& sg : connected_graphs_by_vertices(5)) {
    if (sg.vertex_count < 3) continue;
    const VertexId w = sg.vertex_count - 1;
    const Network g = sg.to_network(w);
    for (VertexId v = 0; v < w; ++v) {
      const VertexId k[] = {v};
      GoodSubsetResult r;
      try {
        r = good_subset(g, k);
      } catch (const std::invalid_argument&) {
        continue;
      }
      const std::uint64_t wm = mask_of(r.w);
      EXPECT_EQ(wm & (std::uint64_t{1} << w), 0u);
      for (const Edge& e : g.edges()) {
        if (e.u == v && e.v != w) EXPECT_TRUE((wm >> e.v) & 1u);
        if (e.v == v && e.u != w) EXPECT_TRUE((wm >> e.u) & 1u);
      }
      EXPECT_TRUE(r.certificate_ok);
      const GoodSubsetInequality q = good_subset_inequality(g, r.w);
      EXPECT_TRUE(q.holds) << "worst " << q.worst_ratio;
    }
  }
}

TEST(GoodSubset, RejectsBadK) {
  const Network g = with_wired(path_graph(3), 2);
  const VertexId bad[] = {2};
  EXPECT_THROW(good_subset(g, bad), std::invalid_argument);
  EXPECT_THROW(good_subset(g, {}), std::invalid_argument);
}

TEST(Conditions, OneDimensionDecays) {
  const int radii[] = {4, 16, 64};
  const ConditionReport r = condition_diagnostics(1, radii);
  EXPECT_FALSE(r.vertex_bounded_below);
  EXPECT_LT(r.rows.back().vertex_min, r.rows.front().vertex_min / 4.0);
}

TEST(Conditions, ThreeDimensionsBounded) {
  const int radii[] = {4, 8};
  const ConditionReport r = condition_diagnostics(3, radii);
  EXPECT_TRUE(r.vertex_bounded_below);
  EXPECT_TRUE(r.bands_increasing);
  for (const auto& row : r.rows) EXPECT_GT(row.vertex_min, 0.5);
}
