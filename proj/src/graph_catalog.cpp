#include "wsf/graph_catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace wsf {

Network SimpleGraph::to_network(std::optional<VertexId> wired) const {
  std::vector<Edge> list;
  for (auto [u, v] : edges) list.push_back({u, v, 1.0, -1});
  return Network(vertex_count, std::move(list), wired);
}

SimpleGraph canonical_form(const SimpleGraph& g) {
  const int n = g.vertex_count;
  if (n > 9) throw std::invalid_argument("canonical_form is limited to 9 vertices");
  std::vector<int> deg(n, 0);
  for (auto [u, v] : g.edges) {
    ++deg[u];
    ++deg[v];
  }
  // Only relabelings that sort vertices by decreasing degree are tried; the
  // least edge list among them is still an isomorphism invariant.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });

  SimpleGraph best{n, {}};
  bool have = false;
  std::vector<int> label(n);
  std::vector<std::pair<int, int>> cur;
  auto try_order = [&] {
    for (int i = 0; i < n; ++i) label[order[i]] = i;
    cur.clear();
    for (auto [u, v] : g.edges) cur.emplace_back(std::min(label[u], label[v]), std::max(label[u], label[v]));
    std::sort(cur.begin(), cur.end());
    if (!have || cur < best.edges) {
      best.edges = cur;
      have = true;
    }
  };
  // Permute within each block of equal degree.
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && deg[order[j]] == deg[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  for (auto [b, e] : blocks) std::sort(order.begin() + b, order.begin() + e);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == blocks.size()) {
      try_order();
      return;
    }
    auto [b, e] = blocks[k];
    do {
      self(self, k + 1);
    } while (std::next_permutation(order.begin() + b, order.begin() + e));
  };
  rec(rec, 0);
  if (g.edges.empty()) best.edges.clear();
  return best;
}

namespace {

bool connected(const SimpleGraph& g) {
  std::vector<int> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int parts = g.vertex_count;
  for (auto [u, v] : g.edges) {
    const int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --parts;
    }
  }
  return parts == 1;
}

// All graphs reachable from `start` by adding a pendant vertex or a missing
// edge, closed under those moves while within the limits.
std::vector<SimpleGraph> grow(int max_vertices, int max_edges) {
  std::set<std::vector<std::pair<int, int>>> seen_by_n[16];
  std::vector<SimpleGraph> frontier{SimpleGraph{2, {{0, 1}}}};
  std::vector<SimpleGraph> all;
  seen_by_n[2].insert(frontier[0].edges);
  while (!frontier.empty()) {
    std::vector<SimpleGraph> next;
    for (const SimpleGraph& g : frontier) {
      all.push_back(g);
      if (static_cast<int>(g.edges.size()) >= max_edges) continue;
      auto offer = [&](SimpleGraph h) {
        std::sort(h.edges.begin(), h.edges.end());
        SimpleGraph c = canonical_form(h);
        if (seen_by_n[c.vertex_count].insert(c.edges).second) next.push_back(std::move(c));
      };
      if (g.vertex_count < max_vertices)
        for (int u = 0; u < g.vertex_count; ++u) {
          SimpleGraph h = g;
          h.edges.emplace_back(u, g.vertex_count);
          ++h.vertex_count;
          offer(std::move(h));
        }
      for (int u = 0; u < g.vertex_count; ++u)
        for (int v = u + 1; v < g.vertex_count; ++v) {
          if (std::find(g.edges.begin(), g.edges.end(), std::pair{u, v}) != g.edges.end()) continue;
          SimpleGraph h = g;
          h.edges.emplace_back(u, v);
          offer(std::move(h));
        }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const SimpleGraph& a, const SimpleGraph& b) {
    if (a.vertex_count != b.vertex_count) return a.vertex_count < b.vertex_count;
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  });
  for (const SimpleGraph& g : all)
    if (!connected(g)) throw std::logic_error("catalog produced a disconnected graph");
  return all;
}

}  // namespace

std::vector<SimpleGraph> connected_graphs_by_vertices(int max_vertices) {
  if (max_vertices < 2 || max_vertices > 8) throw std::invalid_argument("max_vertices must be in [2, 8]");
  return grow(max_vertices, max_vertices * (max_vertices - 1) / 2);
}

std::vector<SimpleGraph> connected_graphs_by_edges(int max_edges) {
  if (max_edges < 1 || max_edges > 8) throw std::invalid_argument("max_edges must be in [1, 8]");
  return grow(max_edges + 1, max_edges);
}

Network random_network(int n, double extra, RngStream& rng, double cmin, double cmax) {
  if (n < 2) throw std::invalid_argument("random network needs at least two vertices");
  if (!(cmin > 0.0) || cmax < cmin) throw std::invalid_argument("bad conductance range");
  auto draw_c = [&] { return cmin == cmax ? cmin : cmin + (cmax - cmin) * rng.uniform01(); };
  std::vector<Edge> edges;
  std::vector<std::vector<char>> joined(n, std::vector<char>(n, 0));
  for (int v = 1; v < n; ++v) {
    const int u = static_cast<int>(rng.bounded(static_cast<std::uint32_t>(v)));
    edges.push_back({u, v, draw_c(), -1});
    joined[u][v] = joined[v][u] = 1;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!joined[u][v] && rng.uniform01() < extra) edges.push_back({u, v, draw_c(), -1});
  return Network(n, std::move(edges));
}

}  // namespace wsf
