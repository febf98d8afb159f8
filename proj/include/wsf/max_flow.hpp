#pragma once

#include <vector>

namespace wsf {

/// Dinic's algorithm on real capacities.
class MaxFlow {
 public:
  explicit MaxFlow(int node_count);

  /// Adds a directed arc and returns its index.
  int add_arc(int from, int to, double capacity);

  /// Maximum flow value from s to t. Residual capacities below `eps` count
  /// as saturated.
  double solve(int s, int t, double eps = 1e-13);

  double flow(int arc) const;
  int from(int arc) const { return arcs_[2 * arc + 1].to; }
  int to(int arc) const { return arcs_[2 * arc].to; }
  int arc_count() const { return static_cast<int>(arcs_.size() / 2); }

 private:
  struct Arc {
    int to;
    double residual;
  };

  bool levels(int s, int t, double eps);
  double push(int x, int t, double limit, double eps);

  int n_;
  std::vector<Arc> arcs_;  // arc 2i forward, 2i+1 its reverse
  std::vector<std::vector<int>> out_;
  std::vector<double> capacity_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace wsf
