#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wsf/network.hpp"

namespace wsf {

/// Acyclic spanning subgraph of a network, stored as an edge membership mask.
/// Samplers also record the parent edge of every vertex toward the root.
/// Component structure is computed on first use; a Forest is not meant to be
/// shared between threads while that happens.
class Forest {
 public:
  Forest() = default;
  /// Throws std::invalid_argument if the edges contain a cycle.
  Forest(const Network& g, std::vector<char> in_forest);
  /// Tree given by parent edges toward `root` (kNoEdge at the root).
  static Forest from_parents(const Network& g, std::vector<EdgeId> parent_edge, VertexId root);

  const Network& network() const { return *g_; }
  bool contains(EdgeId e) const { return in_forest_[e] != 0; }
  const std::vector<char>& mask() const { return in_forest_; }
  std::vector<EdgeId> edge_ids() const;
  /// Sorted labels of the forest edges.
  std::vector<std::int64_t> labels() const;
  int edge_count() const { return edge_count_; }

  bool rooted() const { return root_ != kNoVertex; }
  VertexId root() const { return root_; }
  std::span<const EdgeId> parent_edges() const { return parent_edge_; }

  const std::vector<int>& component_of() const;
  int component_count() const;
  bool same_component(VertexId a, VertexId b) const { return component_of()[a] == component_of()[b]; }
  bool is_spanning_tree() const { return component_count() == 1; }

 private:
  const Network* g_ = nullptr;
  std::vector<char> in_forest_;
  int edge_count_ = 0;
  std::vector<EdgeId> parent_edge_;
  VertexId root_ = kNoVertex;
  mutable std::vector<int> component_;
  mutable int component_count_ = -1;
};

/// Disjoint-set forest with union by size and path halving.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace wsf
