#include "wsf/sampling.hpp"

#include <algorithm>
#include <stdexcept>

#include "wsf/electrical.hpp"

namespace wsf {

Forest wilson_ust(const Network& g, VertexId root, RngStream& rng) {
  WilsonSampler sampler(g);
  return sampler.sample_forest(root, rng);
}

Forest sample_free(const Network& g, RngStream& rng) { return wilson_ust(g, 0, rng); }

WiredForest sample_wired(const Network& wired, RngStream& rng) {
  if (!wired.wired_vertex()) throw std::invalid_argument("sample_wired needs a wired vertex");
  const VertexId w = *wired.wired_vertex();
  WiredForest out{wilson_ust(wired, w, rng), {}, {}, 0};

  const VertexId n = wired.vertex_count();
  UnionFind uf(n);
  for (EdgeId e = 0; e < wired.edge_count(); ++e) {
    const Edge& ed = wired.edge(e);
    if (out.tree.contains(e) && ed.u != w && ed.v != w) uf.unite(ed.u, ed.v);
  }
  out.component.assign(n, -1);
  std::vector<int> id_of_root(n, -1);
  int next = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (v == w) continue;
    const int r = uf.find(v);
    if (id_of_root[r] < 0) id_of_root[r] = next++;
    out.component[v] = id_of_root[r];
  }
  out.infinite_direction.assign(next, 0);
  for (EdgeId e = 0; e < wired.edge_count(); ++e) {
    const Edge& ed = wired.edge(e);
    if (!out.tree.contains(e)) continue;
    if (ed.u == w) out.infinite_direction[out.component[ed.v]] = 1;
    if (ed.v == w) out.infinite_direction[out.component[ed.u]] = 1;
  }
  for (VertexId v = 0; v < n; ++v)
    if (wired.has_coords(v)) out.truncation_radius = std::max(out.truncation_radius, sup_norm(wired.coords(v)));
  return out;
}

namespace {

Network make_box(int dimension, int radius) {
  return build_lattice_box({dimension, radius, BoundaryMode::wired});
}

VertexId checked_origin(const Network& box, int dimension, int radius, std::span<const int> o) {
  if (static_cast<int>(o.size()) != dimension) throw std::invalid_argument("origin has wrong dimension");
  if (sup_norm(o) >= radius) throw std::invalid_argument("origin must be an interior vertex of the box");
  (void)box;
  return lattice_index(dimension, radius, o);
}

}  // namespace

RootWiredSampler::RootWiredSampler(int dimension, int radius, std::span<const int> o)
    : radius_(radius),
      box_(make_box(dimension, radius)),
      origin_(checked_origin(box_, dimension, radius, o)),
      wilson_([&]() -> const Network& {
        const VertexId k[] = {origin_, *box_.wired_vertex()};
        ContractResult c = contract(box_, k);
        merged_ = std::move(c.network);
        to_merged_ = std::move(c.vertex_map);
        return merged_;
      }()) {
  merged_root_ = to_merged_[origin_];
  to_box_.assign(merged_.vertex_count(), kNoVertex);
  for (VertexId v = 0; v < box_.vertex_count(); ++v)
    if (v != *box_.wired_vertex()) to_box_[to_merged_[v]] = v;
  to_box_[merged_root_] = origin_;
}

RootWiredSample RootWiredSampler::sample(RngStream& rng) {
  wilson_.sample(merged_root_, rng, parents_);
  const VertexId n = merged_.vertex_count();
  state_.assign(n, 0);
  state_[merged_root_] = -1;

  // A vertex belongs to F(o) iff the last edge of its path to the merged
  // root was, in the box, an edge at o rather than a boundary edge.
  for (VertexId x = 0; x < n; ++x) {
    if (state_[x] != 0) continue;
    walk_.clear();
    VertexId y = x;
    signed char verdict = 0;
    while (true) {
      if (state_[y] != 0) {
        verdict = state_[y];
        break;
      }
      walk_.push_back(y);
      const EdgeId pe = parents_[y];
      const VertexId up = merged_.other_end(pe, y);
      if (up == merged_root_) {
        const Edge& original = box_.edge(static_cast<EdgeId>(merged_.edge(pe).label));
        verdict = (original.u == origin_ || original.v == origin_) ? 1 : -1;
        break;
      }
      y = up;
    }
    for (VertexId z : walk_) state_[z] = verdict;
  }

  RootWiredSample out;
  out.origin_component.push_back(origin_);
  for (VertexId x = 0; x < n; ++x) {
    if (x == merged_root_ || state_[x] != 1) continue;
    const VertexId b = to_box_[x];
    out.origin_component.push_back(b);
    out.origin_edges.push_back(static_cast<EdgeId>(merged_.edge(parents_[x]).label));
    out.max_sup_norm = std::max(out.max_sup_norm, sup_norm(box_.coords(b)));
  }
  std::sort(out.origin_edges.begin(), out.origin_edges.end());
  out.tree = Forest::from_parents(merged_, parents_, merged_root_);
  return out;
}

RootWiredSample sample_wsf_o(const LatticeBoxSpec& spec, std::span<const int> o, RngStream& rng) {
  RootWiredSampler sampler(spec.dimension, spec.radius, o);
  RootWiredSample s = sampler.sample(rng);
  // The tree points into the sampler's network, which dies here.
  s.tree = Forest();
  return s;
}

ConditionedNetwork condition_on_edge(const Network& g, EdgeId e, bool present) {
  if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("edge out of range");
  const Edge& ed = g.edge(e);
  if (present) {
    const VertexId k[] = {ed.u, ed.v};
    ContractResult c = contract(g, k);
    return {std::move(c.network), std::move(c.vertex_map)};
  }
  Network rest = delete_edges(g, std::span<const EdgeId>(&e, 1));
  if (g.is_connected() && !rest.is_connected())
    throw std::invalid_argument("conditioning a bridge to be absent has probability zero");
  std::vector<VertexId> identity(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) identity[v] = v;
  return {std::move(rest), std::move(identity)};
}

EdgeId find_edge_by_label(const Network& g, std::int64_t label) {
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (g.edge(e).label == label) return e;
  return kNoEdge;
}

double configuration_probability(const Network& g, std::span<const EdgeId> present,
                                 std::span<const EdgeId> absent, const SolveOptions& options) {
  Network current = g;
  double p = 1.0;
  auto decide = [&](EdgeId original, bool in_tree) {
    const std::int64_t label = g.edge(original).label;
    const EdgeId e = find_edge_by_label(current, label);
    if (e == kNoEdge) {
      // Dropped as a loop by an earlier contraction: it closes a cycle.
      if (in_tree) p = 0.0;
      return;
    }
    const double q = kirchhoff_edge_probability(current, e, options);
    const double factor = in_tree ? q : 1.0 - q;
    if (factor <= 0.0) {
      p = 0.0;
      return;
    }
    p *= factor;
    current = condition_on_edge(current, e, in_tree).network;
  };
  for (EdgeId e : present) {
    decide(e, true);
    if (p == 0.0) return 0.0;
  }
  for (EdgeId e : absent) {
    decide(e, false);
    if (p == 0.0) return 0.0;
  }
  return p;
}

std::vector<char> sample_by_conditioning(const Network& g, RngStream& rng, const SolveOptions& options) {
  std::vector<char> in_tree(g.edge_count(), 0);
  Network current = g;
  for (EdgeId original = 0; original < g.edge_count(); ++original) {
    const EdgeId e = find_edge_by_label(current, g.edge(original).label);
    if (e == kNoEdge) continue;
    const double q = kirchhoff_edge_probability(current, e, options);
    const bool take = q >= 1.0 || rng.uniform01() < q;
    in_tree[original] = take ? 1 : 0;
    current = condition_on_edge(current, e, take).network;
  }
  return in_tree;
}

}  // namespace wsf
