#include "wsf/wilson.hpp"

#include <algorithm>
#include <stdexcept>

#include "wsf/error.hpp"

namespace wsf {

WilsonSampler::WilsonSampler(const Network& g) : g_(&g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("empty network");
  const VertexId bad = g.first_unreachable(0);
  if (bad != kNoVertex)
    throw DisconnectedGraph("network is disconnected: vertex " + g.vertex_name(bad) +
                                " is unreachable from vertex " + g.vertex_name(0),
                            bad);
  in_tree_.assign(g.vertex_count(), 0);
  position_.assign(g.vertex_count(), 0);
}

std::pair<VertexId, EdgeId> WilsonSampler::step(VertexId x, RngStream& rng) const {
  const auto inc = g_->incident(x);
  if (g_->uniform_at(x)) {
    const Incidence& pick = inc[rng.bounded(static_cast<std::uint32_t>(inc.size()))];
    return {pick.neighbor, pick.edge};
  }
  const auto cum = g_->cumulative_conductance(x);
  const double u = rng.uniform01() * cum.back();
  auto it = std::upper_bound(cum.begin(), cum.end(), u);
  if (it == cum.end()) --it;
  const Incidence& pick = inc[it - cum.begin()];
  return {pick.neighbor, pick.edge};
}

void WilsonSampler::sample(VertexId root, RngStream& rng, std::vector<EdgeId>& parent_edge) {
  const VertexId n = g_->vertex_count();
  if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
  parent_edge.assign(n, kNoEdge);
  std::fill(in_tree_.begin(), in_tree_.end(), 0);
  in_tree_[root] = 1;
  steps_ = 0;

  for (VertexId start = 0; start < n; ++start) {
    if (in_tree_[start]) continue;
    path_.clear();
    path_edges_.clear();
    path_.push_back(start);
    position_[start] = 0;
    while (true) {
      const auto [y, e] = step(path_.back(), rng);
      ++steps_;
      if (in_tree_[y]) {
        path_edges_.push_back(e);
        break;
      }
      const int pos = position_[y];
      if (pos < static_cast<int>(path_.size()) && path_[pos] == y) {
        // Erase the loop just closed at y.
        path_.resize(pos + 1);
        path_edges_.resize(pos);
      } else {
        path_edges_.push_back(e);
        position_[y] = static_cast<int>(path_.size());
        path_.push_back(y);
      }
    }
    for (std::size_t i = 0; i < path_.size(); ++i) {
      in_tree_[path_[i]] = 1;
      parent_edge[path_[i]] = path_edges_[i];
    }
  }
}

Forest WilsonSampler::sample_forest(VertexId root, RngStream& rng) {
  std::vector<EdgeId> parents;
  sample(root, rng, parents);
  return Forest::from_parents(*g_, std::move(parents), root);
}

}  // namespace wsf
