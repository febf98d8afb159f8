#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "test_util.hpp"
#include "wsf/electrical.hpp"
#include "wsf/exploration.hpp"
#include "wsf/forest.hpp"
#include "wsf/lattice.hpp"

using namespace wsf;
using namespace wsf::testing;

namespace {

struct State {
  std::vector<EdgeId> examined;
  std::vector<VertexId> s;
};

// E_n and S_n before step n of a trace.
State state_before(const Network& box, VertexId o, const ExplorationTrace& t, int n) {
  State st;
  UnionFind uf(box.vertex_count());
  for (int k = 0; k < n; ++k) {
    st.examined.push_back(t.steps[k].edge);
    if (t.steps[k].in_forest) uf.unite(box.edge(t.steps[k].edge).u, box.edge(t.steps[k].edge).v);
  }
  for (VertexId v = 0; v < box.vertex_count(); ++v)
    if (uf.find(v) == uf.find(o)) st.s.push_back(v);
  return st;
}

}  // namespace

TEST(EdgeRule, Parse) {
  EXPECT_EQ(parse_edge_rule("ball-min"), EdgeRule::ball_min);
  EXPECT_EQ(parse_edge_rule("max-current"), EdgeRule::max_current);
  EXPECT_THROW(parse_edge_rule("random"), std::invalid_argument);
  EXPECT_EQ(to_string(EdgeRule::max_current), "max-current");
}

TEST(Exploration, InitialValueAndFirstEdge) {
  for (int d : {2, 3}) {
    const int r = 3;
    const Network box = build_lattice_box({d, r, BoundaryMode::wired});
    const VertexId o = lattice_origin(d, r);
    RngStream rng(1, 0);
    const ExplorationTrace t = exploration_process(box, o, rng);
    const VertexId src[] = {o}, dst[] = {*box.wired_vertex()};
    EXPECT_NEAR(t.m0, effective_conductance(box, src, dst), 1e-9);
    ASSERT_FALSE(t.steps.empty());
    // Least of the 2d edges at o: the one toward -e_1.
    std::vector<int> minus(d, 0);
    minus[0] = -1;
    const Edge& e = box.edge(t.steps[0].edge);
    const VertexId other = e.u == o ? e.v : e.u;
    EXPECT_TRUE(e.u == o || e.v == o);
    EXPECT_EQ(other, lattice_index(d, r, minus));
  }
}

TEST(Exploration, MonotoneAndTerminates) {
  const int r = 5;
  const Network box = build_lattice_box({2, r, BoundaryMode::wired});
  const VertexId o = lattice_origin(2, r);
  for (EdgeRule rule : {EdgeRule::ball_min, EdgeRule::max_current}) {
    for (int i = 0; i < 20; ++i) {
      RngStream rng(2, i);
      ExplorationOptions opt;
      opt.rule = rule;
      const ExplorationTrace t = exploration_process(box, o, rng, opt);
      std::set<EdgeId> seen;
      int last_size = 1;
      for (const ExplorationStep& s : t.steps) {
        EXPECT_TRUE(seen.insert(s.edge).second);
        EXPECT_GE(s.s_size, last_size);
        last_size = s.s_size;
        EXPECT_FALSE(box.is_wired(box.edge(s.edge).u) || box.is_wired(box.edge(s.edge).v));
        EXPECT_NEAR(s.m_expected, s.m_before, 1e-9);
        if (!s.in_forest) EXPECT_LE(s.m_after, s.m_before + 1e-9);
      }
      EXPECT_TRUE(t.event_a || t.exhausted);
      EXPECT_FALSE(t.truncated);
      EXPECT_EQ(static_cast<int>(t.final_s.size()), last_size);
    }
  }
}

TEST(Exploration, MaxStepsTruncates) {
  const Network box = build_lattice_box({2, 6, BoundaryMode::wired});
  RngStream rng(3, 0);
  ExplorationOptions opt;
  opt.max_steps = 3;
  const ExplorationTrace t = exploration_process(box, lattice_origin(2, 6), rng, opt);
  EXPECT_LE(t.steps.size(), 3u);
}

TEST(Exploration, ReplaysStepProbabilities) {
  const int r = 4;
  const Network box = build_lattice_box({2, r, BoundaryMode::wired});
  const VertexId o = lattice_origin(2, r);
  RngStream rng(4, 0);
  const ExplorationTrace t = exploration_process(box, o, rng);
  for (int n = 0; n < static_cast<int>(t.steps.size()); ++n) {
    const State st = state_before(box, o, t, n);
    EXPECT_NEAR(conditional_inclusion_probability(box, st.s, st.examined, t.steps[n].edge), t.steps[n].probability,
                1e-9);
    const VertexId dst[] = {*box.wired_vertex()};
    std::vector<EdgeId> e = st.examined;
    const Network rest = delete_edges(box, e);
    EXPECT_NEAR(effective_conductance_tolerant(rest, st.s, dst), t.steps[n].m_before, 1e-9);
  }
}

TEST(EscapeBounds, HoldOnExplorationSteps) {
  for (auto [d, r] : {std::pair{2, 8}, std::pair{3, 6}}) {
    const Network box = build_lattice_box({d, r, BoundaryMode::wired});
    const VertexId o = lattice_origin(d, r);
    int checked = 0;
    for (int i = 0; checked < 50; ++i) {
      RngStream rng(5, i);
      ExplorationOptions opt;
      opt.max_steps = 40;
      const ExplorationTrace t = exploration_process(box, o, rng, opt);
      for (int n = 0; n < static_cast<int>(t.steps.size()) && checked < 50; n += 3) {
        const State st = state_before(box, o, t, n);
        const Edge& e = box.edge(t.steps[n].edge);
        const bool inside = std::find(st.s.begin(), st.s.end(), e.u) != st.s.end() &&
                            std::find(st.s.begin(), st.s.end(), e.v) != st.s.end();
        if (inside) continue;
        const EscapeBoundReport b = escape_probability_bound_check(box, st.s, st.examined, t.steps[n].edge);
        EXPECT_TRUE(b.lower_ok) << b.probability << " < " << b.lower;
        EXPECT_TRUE(b.upper_ok) << b.probability << " > " << b.upper;
        EXPECT_GE(b.probability, 1.0 / (2 * d) - 1e-12);
        ++checked;
      }
    }
  }
}

TEST(EscapeBounds, FreshVertexStrictlyBelowOne) {
  const Network box = build_lattice_box({3, 4, BoundaryMode::wired});
  const VertexId o = lattice_origin(3, 4);
  const VertexId s[] = {o};
  const EscapeBoundReport b = escape_probability_bound_check(box, s, {}, box.incident(o)[0].edge);
  EXPECT_GT(b.alpha, 0.0);
  EXPECT_LT(b.upper, 1.0);
  EXPECT_TRUE(b.upper_ok);
  EXPECT_TRUE(b.lower_ok);
}

TEST(EscapeBounds, WiredTriangleIsExact) {
  // o = 0, v = 1, wired = 2; the edge o-v is in WSF_o with probability
  // c(ov) / EC(v, {o, wired}) = 1/2.
  const Network g(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}, VertexId{2});
  const VertexId s[] = {0};
  EXPECT_NEAR(conditional_inclusion_probability(g, s, {}, 0), 0.5, 1e-12);
  const Network w(3, {{0, 1, 3.0}, {1, 2, 1.0}, {0, 2, 1.0}}, VertexId{2});
  const VertexId v[] = {1}, rest[] = {0, 2};
  EXPECT_NEAR(conditional_inclusion_probability(w, s, {}, 0), 3.0 / effective_conductance(w, v, rest), 1e-12);
}
