#include "wsf/martingale.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "wsf/electrical.hpp"
#include "wsf/error.hpp"
#include "wsf/forest.hpp"
#include "wsf/graph_catalog.hpp"
#include "wsf/sampling.hpp"

namespace wsf {

namespace {

Network relabeled(const Network& g) {
  std::vector<Edge> edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].label = static_cast<std::int64_t>(i);
  return Network(g.vertex_count(), std::move(edges), g.wired_vertex(), g.embedding(), g.names());
}

constexpr int kMaxInterior = 12;

}  // namespace

MartingaleOracle::MartingaleOracle(const Network& g, VertexId o, const SolveOptions& options)
    : g_(g), o_(o), options_(options) {
  if (!g.wired_vertex()) throw std::invalid_argument("martingale check needs a wired vertex");
  wired_ = *g.wired_vertex();
  if (o < 0 || o >= g.vertex_count() || o == wired_) throw std::invalid_argument("o must be a non-wired vertex");
  if (!g.is_connected()) throw std::invalid_argument("network must be connected");
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (g.edge(e).u != wired_ && g.edge(e).v != wired_) interior_.push_back(e);
  if (static_cast<int>(interior_.size()) > kMaxInterior)
    throw ResourceError("martingale oracle limited to 12 interior edges");
  pow3_.assign(interior_.size() + 1, 1);
  for (std::size_t i = 1; i < pow3_.size(); ++i) pow3_[i] = pow3_[i - 1] * 3;
  nodes_.resize(pow3_.back());
  conductance_.assign(pow3_.back(), 0.0);
  conductance_ready_.assign(pow3_.back(), 0);

  const Network labeled = relabeled(g);
  const VertexId merge[] = {o, wired_};
  Node& root = nodes_[0];
  root.ready = true;
  root.probability = 1.0;
  root.network = contract(labeled, merge).network;
}

int MartingaleOracle::interior_index(EdgeId e) const {
  const auto it = std::find(interior_.begin(), interior_.end(), e);
  if (it == interior_.end()) throw std::invalid_argument("edge is not an interior edge");
  return static_cast<int>(it - interior_.begin());
}

int MartingaleOracle::digit(std::uint32_t key, int i) {
  for (int k = 0; k < i; ++k) key /= 3;
  return static_cast<int>(key % 3);
}

std::uint32_t MartingaleOracle::with_digit(std::uint32_t key, int i, int d) const {
  return key - digit(key, i) * pow3_[i] + d * pow3_[i];
}

MartingaleOracle::Node& MartingaleOracle::node(std::uint32_t key) {
  Node& nd = nodes_[key];
  if (nd.ready) return nd;
  int top = -1;
  for (int i = static_cast<int>(interior_.size()) - 1; i >= 0; --i)
    if (digit(key, i) != 0) {
      top = i;
      break;
    }
  const int d = digit(key, top);
  Node& parent = node(with_digit(key, top, 0));
  nd.ready = true;
  if (parent.probability == 0.0) return nd;
  const EdgeId e = find_edge_by_label(parent.network, interior_[top]);
  const bool present = d == 1;
  if (e == kNoEdge) {
    // A loop of the conditioned network is never in the tree.
    if (!present) {
      nd.probability = parent.probability;
      nd.network = parent.network;
    }
    return nd;
  }
  const double q = kirchhoff_edge_probability(parent.network, e, options_);
  const double factor = present ? q : 1.0 - q;
  if (factor <= 0.0) return nd;
  nd.probability = parent.probability * factor;
  nd.network = condition_on_edge(parent.network, e, present).network;
  return nd;
}

double MartingaleOracle::probability(std::uint32_t key) { return node(key).probability; }

std::vector<char> MartingaleOracle::component(std::uint32_t key) const {
  UnionFind uf(g_.vertex_count());
  for (std::size_t i = 0; i < interior_.size(); ++i)
    if (digit(key, static_cast<int>(i)) == 1) uf.unite(g_.edge(interior_[i]).u, g_.edge(interior_[i]).v);
  std::vector<char> in_s(g_.vertex_count(), 0);
  for (VertexId v = 0; v < g_.vertex_count(); ++v) in_s[v] = uf.find(v) == uf.find(o_);
  return in_s;
}

double MartingaleOracle::conductance(std::uint32_t key) {
  if (conductance_ready_[key]) return conductance_[key];
  std::vector<EdgeId> decided;
  for (std::size_t i = 0; i < interior_.size(); ++i)
    if (digit(key, static_cast<int>(i)) != 0) decided.push_back(interior_[i]);
  const Network rest = delete_edges(g_, decided);
  const auto in_s = component(key);
  std::vector<VertexId> s;
  for (VertexId v = 0; v < g_.vertex_count(); ++v)
    if (in_s[v]) s.push_back(v);
  const VertexId w[] = {wired_};
  conductance_[key] = effective_conductance_tolerant(rest, s, w, options_);
  conductance_ready_[key] = 1;
  return conductance_[key];
}

namespace {

// Enumerates F-configurations on `free_idx` on top of `base`.
template <class F>
void for_each_configuration(const MartingaleOracle& oracle, std::uint32_t base, const std::vector<int>& idx, F&& f) {
  const int k = static_cast<int>(idx.size());
  for (std::uint32_t bits = 0; bits < (1u << k); ++bits) {
    std::uint32_t key = base;
    for (int j = 0; j < k; ++j) key = oracle.with_digit(key, idx[j], ((bits >> j) & 1u) ? 1 : 2);
    f(key);
  }
}

struct PairResult {
  double max_discrepancy = 0.0;
  long long configurations = 0;
};

PairResult check_pair(MartingaleOracle& oracle, const std::vector<int>& e0, const std::vector<int>& e1,
                      const Network& g, std::vector<MartingaleRow>* rows, int* skipped) {
  PairResult out;
  std::vector<int> extra;
  for (int i : e1)
    if (std::find(e0.begin(), e0.end(), i) == e0.end()) extra.push_back(i);
  const auto& interior = oracle.interior_edges();
  for_each_configuration(oracle, 0, e0, [&](std::uint32_t key0) {
    const double p0 = oracle.probability(key0);
    if (p0 <= 0.0) return;
    const auto in_s = oracle.component(key0);
    for (int i : e1) {
      const Edge& ed = g.edge(interior[i]);
      if (!in_s[ed.u] && !in_s[ed.v]) {
        if (skipped) ++*skipped;
        return;
      }
    }
    double expected = 0.0;
    for_each_configuration(oracle, key0, extra, [&](std::uint32_t key1) {
      const double p1 = oracle.probability(key1);
      if (p1 > 0.0) expected += p1 * oracle.conductance(key1);
    });
    expected /= p0;
    const double m0 = oracle.conductance(key0);
    const double gap = std::abs(expected - m0);
    out.max_discrepancy = std::max(out.max_discrepancy, gap);
    ++out.configurations;
    if (rows) {
      MartingaleRow row;
      for (int i : e0) (MartingaleOracle::digit(key0, i) == 1 ? row.present : row.absent).push_back(interior[i]);
      row.probability = p0;
      row.m0 = m0;
      row.expected_m1 = expected;
      row.discrepancy = gap;
      rows->push_back(std::move(row));
    }
  });
  return out;
}

}  // namespace

MartingaleCheck martingale_check_exact(const Network& g, VertexId o, std::span<const EdgeId> e0,
                                       std::span<const EdgeId> e1, const SolveOptions& options) {
  MartingaleOracle oracle(g, o, options);
  std::vector<int> i0, i1;
  for (EdgeId e : e1) i1.push_back(oracle.interior_index(e));
  for (EdgeId e : e0) {
    if (std::find(e1.begin(), e1.end(), e) == e1.end()) throw std::invalid_argument("E0 must be a subset of E1");
    i0.push_back(oracle.interior_index(e));
  }
  std::sort(i0.begin(), i0.end());
  i0.erase(std::unique(i0.begin(), i0.end()), i0.end());
  std::sort(i1.begin(), i1.end());
  i1.erase(std::unique(i1.begin(), i1.end()), i1.end());
  MartingaleCheck out;
  const PairResult r = check_pair(oracle, i0, i1, g, &out.rows, &out.skipped);
  out.max_discrepancy = r.max_discrepancy;
  return out;
}

MartingaleSweep martingale_catalog_sweep(int max_edges, const SolveOptions& options) {
  MartingaleSweep sweep;
  const auto graphs = connected_graphs_by_edges(max_edges);
  sweep.graphs = static_cast<int>(graphs.size());
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const SimpleGraph& sg = graphs[gi];
    for (VertexId w = 0; w < sg.vertex_count; ++w) {
      const Network g = sg.to_network(w);
      for (VertexId o = 0; o < sg.vertex_count; ++o) {
        if (o == w) continue;
        MartingaleOracle oracle(g, o, options);
        ++sweep.instances;
        const int k = static_cast<int>(oracle.interior_edges().size());
        for (std::uint32_t m1 = 0; m1 < (1u << k); ++m1) {
          std::vector<int> e1;
          for (int i = 0; i < k; ++i)
            if ((m1 >> i) & 1u) e1.push_back(i);
          // Every subset of E1 in turn, including E1 itself.
          for (std::uint32_t m0 = m1;; m0 = (m0 - 1) & m1) {
            std::vector<int> e0;
            for (int i = 0; i < k; ++i)
              if ((m0 >> i) & 1u) e0.push_back(i);
            const PairResult r = check_pair(oracle, e0, e1, g, nullptr, nullptr);
            ++sweep.pairs;
            sweep.configurations += r.configurations;
            if (r.max_discrepancy > sweep.max_discrepancy || sweep.worst.empty()) {
              if (r.max_discrepancy >= sweep.max_discrepancy) {
                sweep.max_discrepancy = r.max_discrepancy;
                std::ostringstream os;
                os << "graph " << gi << " (" << sg.vertex_count << " vertices, edges";
                for (auto [u, v] : sg.edges) os << ' ' << u << '-' << v;
                os << "), wired " << w << ", o " << o << ", E0 mask " << m0 << ", E1 mask " << m1;
                sweep.worst = os.str();
              }
            }
            if (m0 == 0) break;
          }
        }
      }
    }
  }
  return sweep;
}

}  // namespace wsf
