#include <Eigen/Dense>
#include <stdexcept>
#include <string>

#include "wsf/error.hpp"
#include "wsf/sampling.hpp"

namespace wsf {

namespace {

struct TreeSearch {
  const Network& g;
  std::vector<SpanningTreeEntry>& out;
  int needed;

  static int find(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  }

  void run(EdgeId e, std::vector<int>& parent, int taken, EdgeMask mask, double weight) {
    if (taken == needed) {
      out.push_back({mask, weight});
      return;
    }
    if (g.edge_count() - e < needed - taken) return;
    const Edge& ed = g.edge(e);
    const int a = find(parent, ed.u);
    const int b = find(parent, ed.v);
    if (a != b) {
      parent[b] = a;
      run(e + 1, parent, taken + 1, mask | (EdgeMask{1} << e), weight * ed.conductance);
      parent[b] = b;
    }
    run(e + 1, parent, taken, mask, weight);
  }
};

}  // namespace

SpanningDistribution enumerate_spanning_trees(const Network& g, int edge_cap) {
  if (edge_cap > 64) edge_cap = 64;
  if (g.edge_count() > edge_cap)
    throw ResourceError("spanning tree enumeration limited to " + std::to_string(edge_cap) + " edges");
  if (g.vertex_count() == 0) throw std::invalid_argument("empty network");
  const VertexId bad = g.first_unreachable(0);
  if (bad != kNoVertex) throw DisconnectedGraph("network is disconnected", bad);

  SpanningDistribution dist;
  std::vector<int> parent(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) parent[i] = i;
  TreeSearch search{g, dist.trees, g.vertex_count() - 1};
  search.run(0, parent, 0, 0, 1.0);
  for (const auto& t : dist.trees) dist.normalizer += t.weight;
  dist.matrix_tree_determinant = weighted_tree_count(g);
  return dist;
}

double weighted_tree_count(const Network& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 1.0;
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    lap(e.u, e.u) += e.conductance;
    lap(e.v, e.v) += e.conductance;
    lap(e.u, e.v) -= e.conductance;
    lap(e.v, e.u) -= e.conductance;
  }
  return lap.bottomRightCorner(n - 1, n - 1).partialPivLu().determinant();
}

}  // namespace wsf
