#include "wsf/domination.hpp"

#include <bit>
#include <map>
#include <stdexcept>

#include "wsf/max_flow.hpp"

namespace wsf {

double EdgeSetLaw::expected_size() const {
  double s = 0.0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) s += mass[i] * std::popcount(outcomes[i]);
  return s;
}

namespace {

EdgeSetLaw collapse(const std::map<EdgeMask, double>& weights, double total) {
  EdgeSetLaw law;
  for (const auto& [mask, w] : weights) {
    law.outcomes.push_back(mask);
    law.mass.push_back(w / total);
  }
  return law;
}

// Edges of the tree path from x to y.
EdgeMask tree_path(const Network& g, EdgeMask tree, VertexId x, VertexId y) {
  std::vector<EdgeId> via(g.vertex_count(), kNoEdge);
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack{x};
  seen[x] = 1;
  while (!stack.empty()) {
    const VertexId a = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.incident(a)) {
      if (!((tree >> inc.edge) & 1u) || seen[inc.neighbor]) continue;
      seen[inc.neighbor] = 1;
      via[inc.neighbor] = inc.edge;
      stack.push_back(inc.neighbor);
    }
  }
  EdgeMask path = 0;
  for (VertexId v = y; v != x; v = g.other_end(via[v], v)) path |= EdgeMask{1} << via[v];
  return path;
}

}  // namespace

EdgeSetLaw ust_law_by_label(const Network& g, int edge_cap) {
  const SpanningDistribution dist = enumerate_spanning_trees(g, edge_cap);
  std::map<EdgeMask, double> weights;
  for (const SpanningTreeEntry& t : dist.trees) {
    EdgeMask m = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if ((t.edges >> e) & 1u) m |= EdgeMask{1} << g.edge(e).label;
    weights[m] += t.weight;
  }
  return collapse(weights, dist.normalizer);
}

Coupling monotone_coupling(const EdgeSetLaw& lower, const EdgeSetLaw& upper) {
  const int a = static_cast<int>(lower.outcomes.size());
  const int b = static_cast<int>(upper.outcomes.size());
  MaxFlow flow(a + b + 2);
  const int source = a + b, sink = a + b + 1;
  for (int i = 0; i < a; ++i) flow.add_arc(source, i, lower.mass[i]);
  for (int j = 0; j < b; ++j) flow.add_arc(a + j, sink, upper.mass[j]);
  std::vector<std::pair<int, std::pair<int, int>>> middle;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      if ((lower.outcomes[i] & ~upper.outcomes[j]) == 0) middle.push_back({flow.add_arc(i, a + j, 2.0), {i, j}});
  Coupling c;
  c.transported = flow.solve(source, sink);
  c.feasible = c.transported >= 1.0 - 1e-9;
  for (const auto& [arc, ij] : middle) {
    const double m = flow.flow(arc);
    if (m > 1e-15) c.witness.push_back({ij.first, ij.second, m});
  }
  return c;
}

DominationReport domination_check(const Network& g, VertexId x, VertexId y, int edge_cap) {
  if (x == y) throw std::invalid_argument("domination_check needs x != y");
  if (x < 0 || y < 0 || x >= g.vertex_count() || y >= g.vertex_count())
    throw std::invalid_argument("vertex out of range");
  if (g.edge_count() > 64) throw std::invalid_argument("edge sets are limited to 64 edges");

  std::vector<Edge> edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].label = static_cast<std::int64_t>(i);
  const Network base(g.vertex_count(), std::move(edges));

  DominationReport rep;
  const SpanningDistribution dist = enumerate_spanning_trees(base, edge_cap);
  std::map<EdgeMask, double> lower;
  for (const SpanningTreeEntry& t : dist.trees) lower[t.edges & ~tree_path(base, t.edges, x, y)] += t.weight;
  rep.lower = collapse(lower, dist.normalizer);

  const VertexId pair[] = {x, y};
  rep.upper = ust_law_by_label(contract(base, pair).network, edge_cap);

  const Coupling c = monotone_coupling(rep.lower, rep.upper);
  rep.transported = c.transported;
  rep.feasible = c.feasible;
  rep.witness = c.witness;
  return rep;
}

}  // namespace wsf
