#include "wsf/forest.hpp"

#include <algorithm>
#include <stdexcept>

namespace wsf {

Forest::Forest(const Network& g, std::vector<char> in_forest)
    : g_(&g), in_forest_(std::move(in_forest)) {
  if (in_forest_.size() != static_cast<std::size_t>(g.edge_count()))
    throw std::invalid_argument("forest mask does not match edge count");
  UnionFind uf(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!in_forest_[e]) continue;
    if (!uf.unite(g.edge(e).u, g.edge(e).v)) throw std::invalid_argument("edge set contains a cycle");
    ++edge_count_;
  }
}

Forest Forest::from_parents(const Network& g, std::vector<EdgeId> parent_edge, VertexId root) {
  std::vector<char> mask(g.edge_count(), 0);
  int count = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (parent_edge[v] == kNoEdge) continue;
    mask[parent_edge[v]] = 1;
    ++count;
  }
  Forest f;
  f.g_ = &g;
  f.in_forest_ = std::move(mask);
  f.edge_count_ = count;
  f.parent_edge_ = std::move(parent_edge);
  f.root_ = root;
  return f;
}

std::vector<EdgeId> Forest::edge_ids() const {
  std::vector<EdgeId> out;
  out.reserve(edge_count_);
  for (EdgeId e = 0; e < static_cast<EdgeId>(in_forest_.size()); ++e)
    if (in_forest_[e]) out.push_back(e);
  return out;
}

std::vector<std::int64_t> Forest::labels() const {
  std::vector<std::int64_t> out;
  out.reserve(edge_count_);
  for (EdgeId e = 0; e < static_cast<EdgeId>(in_forest_.size()); ++e)
    if (in_forest_[e]) out.push_back(g_->edge(e).label);
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<int>& Forest::component_of() const {
  if (component_count_ >= 0) return component_;
  const VertexId n = g_->vertex_count();
  UnionFind uf(n);
  for (EdgeId e = 0; e < g_->edge_count(); ++e)
    if (in_forest_[e]) uf.unite(g_->edge(e).u, g_->edge(e).v);
  component_.assign(n, -1);
  std::vector<int> id_of_root(n, -1);
  int next = 0;
  for (VertexId v = 0; v < n; ++v) {
    const int r = uf.find(v);
    if (id_of_root[r] < 0) id_of_root[r] = next++;
    component_[v] = id_of_root[r];
  }
  component_count_ = next;
  return component_;
}

int Forest::component_count() const {
  component_of();
  return component_count_;
}

}  // namespace wsf
