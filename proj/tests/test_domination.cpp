#include <gtest/gtest.h>

#include <algorithm>

#include "wsf/domination.hpp"
#include "wsf/graph_catalog.hpp"
#include "wsf/rng.hpp"

using namespace wsf;

namespace {

double mass_of(const EdgeSetLaw& law, EdgeMask m) {
  for (std::size_t i = 0; i < law.outcomes.size(); ++i)
    if (law.outcomes[i] == m) return law.mass[i];
  return 0.0;
}

// Hall's condition: every family S of lower outcomes fits into the upper
// outcomes containing some member of S.
bool hall_feasible(const EdgeSetLaw& lower, const EdgeSetLaw& upper) {
  const int n = static_cast<int>(lower.outcomes.size());
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    double need = 0.0;
    for (int i = 0; i < n; ++i)
      if ((s >> i) & 1u) need += lower.mass[i];
    double have = 0.0;
    for (std::size_t j = 0; j < upper.outcomes.size(); ++j) {
      bool reach = false;
      for (int i = 0; i < n && !reach; ++i)
        reach = ((s >> i) & 1u) && (lower.outcomes[i] & ~upper.outcomes[j]) == 0;
      if (reach) have += upper.mass[j];
    }
    if (need > have + 1e-9) return false;
  }
  return true;
}

EdgeSetLaw random_law(RngStream& rng, int universe_bits, int outcomes) {
  EdgeSetLaw law;
  std::vector<EdgeMask> all;
  for (EdgeMask m = 0; m < (EdgeMask{1} << universe_bits); ++m) all.push_back(m);
  for (int i = 0; i < outcomes && !all.empty(); ++i) {
    const std::size_t k = rng.bounded(static_cast<std::uint32_t>(all.size()));
    law.outcomes.push_back(all[k]);
    all.erase(all.begin() + static_cast<std::ptrdiff_t>(k));
    law.mass.push_back(0.05 + rng.uniform01());
  }
  double total = 0.0;
  for (double x : law.mass) total += x;
  for (double& x : law.mass) x /= total;
  return law;
}

}  // namespace

TEST(Domination, Triangle) {
  const Network g(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
  const DominationReport r = domination_check(g, 0, 1);
  EXPECT_TRUE(r.feasible);
  EXPECT_NEAR(r.transported, 1.0, 1e-12);
  ASSERT_EQ(r.lower.outcomes.size(), 3u);
  EXPECT_NEAR(mass_of(r.lower, 0), 1.0 / 3, 1e-12);
  EXPECT_NEAR(mass_of(r.lower, 0b010), 1.0 / 3, 1e-12);
  EXPECT_NEAR(mass_of(r.lower, 0b100), 1.0 / 3, 1e-12);
  ASSERT_EQ(r.upper.outcomes.size(), 2u);
  EXPECT_NEAR(mass_of(r.upper, 0b010), 0.5, 1e-12);
  EXPECT_NEAR(mass_of(r.upper, 0b100), 0.5, 1e-12);
}

TEST(Domination, PathHasEmptyRemainder) {
  const Network g(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  const DominationReport r = domination_check(g, 0, 2);
  ASSERT_EQ(r.lower.outcomes.size(), 1u);
  EXPECT_EQ(r.lower.outcomes[0], 0u);
  EXPECT_NEAR(r.lower.mass[0], 1.0, 1e-12);
  EXPECT_TRUE(r.feasible);
}

TEST(Domination, SmallGraphSweep) {
  for (const SimpleGraph& sg : connected_graphs_by_vertices(4)) {
    const Network g = sg.to_network();
    for (VertexId x = 0; x < g.vertex_count(); ++x)
      for (VertexId y = 0; y < g.vertex_count(); ++y) {
        if (x == y) continue;
        const DominationReport r = domination_check(g, x, y);
        EXPECT_TRUE(r.feasible) << "n=" << sg.vertex_count << " x=" << x << " y=" << y;
        EXPECT_GE(r.upper.expected_size(), r.lower.expected_size() - 1e-12);
        double moved = 0.0;
        for (const CouplingEntry& c : r.witness) {
          EXPECT_EQ(r.lower.outcomes[c.lower] & ~r.upper.outcomes[c.upper], 0u);
          moved += c.mass;
        }
        EXPECT_NEAR(moved, r.transported, 1e-9);
      }
  }
}

TEST(Domination, CouplingMatchesHall) {
  RngStream rng(5, 0);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const EdgeSetLaw lower = random_law(rng, 3, 1 + static_cast<int>(rng.bounded(5)));
    const EdgeSetLaw upper = random_law(rng, 3, 1 + static_cast<int>(rng.bounded(5)));
    const Coupling c = monotone_coupling(lower, upper);
    const bool want = hall_feasible(lower, upper);
    ASSERT_EQ(c.feasible, want) << "trial " << trial;
    (want ? feasible : infeasible)++;
    for (int i = 0; i < static_cast<int>(lower.outcomes.size()); ++i) {
      double out = 0.0;
      for (const CouplingEntry& e : c.witness)
        if (e.lower == i) out += e.mass;
      EXPECT_LE(out, lower.mass[i] + 1e-9);
    }
  }
  EXPECT_GT(feasible, 10);
  EXPECT_GT(infeasible, 10);
}

TEST(Domination, ReverseDirectionFails) {
  EdgeSetLaw small{{0}, {1.0}};
  EdgeSetLaw big{{0b11}, {1.0}};
  EXPECT_TRUE(monotone_coupling(small, big).feasible);
  EXPECT_FALSE(monotone_coupling(big, small).feasible);
  EXPECT_NEAR(monotone_coupling(big, small).transported, 0.0, 1e-12);
}
