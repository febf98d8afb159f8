#include "wsf/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace wsf {

MaxFlow::MaxFlow(int node_count) : n_(node_count), out_(node_count) {
  if (node_count < 2) throw std::invalid_argument("flow network needs two nodes");
}

int MaxFlow::add_arc(int from, int to, double capacity) {
  if (from < 0 || from >= n_ || to < 0 || to >= n_) throw std::invalid_argument("arc endpoint out of range");
  if (capacity < 0) throw std::invalid_argument("negative capacity");
  const int id = static_cast<int>(capacity_.size());
  out_[from].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({to, capacity});
  out_[to].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({from, 0.0});
  capacity_.push_back(capacity);
  return id;
}

bool MaxFlow::levels(int s, int t, double eps) {
  level_.assign(n_, -1);
  level_[s] = 0;
  std::queue<int> q;
  q.push(s);
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int a : out_[x]) {
      const Arc& arc = arcs_[a];
      if (arc.residual > eps && level_[arc.to] < 0) {
        level_[arc.to] = level_[x] + 1;
        q.push(arc.to);
      }
    }
  }
  return level_[t] >= 0;
}

double MaxFlow::push(int x, int t, double limit, double eps) {
  if (x == t) return limit;
  for (std::size_t& i = next_[x]; i < out_[x].size(); ++i) {
    const int a = out_[x][i];
    Arc& arc = arcs_[a];
    if (arc.residual <= eps || level_[arc.to] != level_[x] + 1) continue;
    const double got = push(arc.to, t, std::min(limit, arc.residual), eps);
    if (got > 0) {
      arc.residual -= got;
      arcs_[a ^ 1].residual += got;
      return got;
    }
  }
  return 0.0;
}

double MaxFlow::solve(int s, int t, double eps) {
  double total = 0.0;
  while (levels(s, t, eps)) {
    next_.assign(n_, 0);
    while (true) {
      const double got = push(s, t, std::numeric_limits<double>::infinity(), eps);
      if (got <= 0) break;
      total += got;
    }
  }
  return total;
}

double MaxFlow::flow(int arc) const { return capacity_[arc] - arcs_[2 * arc].residual; }

}  // namespace wsf
