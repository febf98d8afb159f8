#pragma once

#include <cstdint>
#include <vector>

#include "wsf/forest.hpp"
#include "wsf/network.hpp"
#include "wsf/rng.hpp"

namespace wsf {

/// Wilson's algorithm: loop-erased random walks with transition probability
/// c(e)/pi(x), attached to the growing tree in vertex-index order. Parallel
/// edges are sampled individually. Cycles are erased from an explicit path
/// stack; `position_` remembers where each vertex last sat on the stack.
///
/// One sampler per worker: it owns O(|V|) scratch space and a reference to
/// the (immutable) network.
class WilsonSampler {
 public:
  /// Throws DisconnectedGraph naming an unreachable vertex.
  explicit WilsonSampler(const Network& g);

  /// Fills `parent_edge` with each vertex's edge toward `root`.
  void sample(VertexId root, RngStream& rng, std::vector<EdgeId>& parent_edge);

  Forest sample_forest(VertexId root, RngStream& rng);

  /// Random-walk steps taken by the last call to sample().
  std::uint64_t last_steps() const { return steps_; }

  const Network& network() const { return *g_; }

 private:
  std::pair<VertexId, EdgeId> step(VertexId x, RngStream& rng) const;

  const Network* g_;
  std::vector<char> in_tree_;
  std::vector<int> position_;
  std::vector<VertexId> path_;
  std::vector<EdgeId> path_edges_;
  std::uint64_t steps_ = 0;
};

}  // namespace wsf
