#include "wsf/exploration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "wsf/electrical.hpp"
#include "wsf/lattice.hpp"

namespace wsf {

EdgeRule parse_edge_rule(const std::string& text) {
  if (text == "ball-min" || text == "ball_min") return EdgeRule::ball_min;
  if (text == "max-current" || text == "max_current") return EdgeRule::max_current;
  throw std::invalid_argument("unknown edge rule '" + text + "' (expected ball-min or max-current)");
}

std::string to_string(EdgeRule rule) { return rule == EdgeRule::ball_min ? "ball-min" : "max-current"; }

namespace {

Network without(const Network& g, const std::vector<char>& removed) {
  std::vector<EdgeId> ids;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (removed[e]) ids.push_back(e);
  return delete_edges(g, ids);
}

VertexId outer_end(const Network& g, EdgeId e, const std::vector<char>& in_s) {
  const Edge& ed = g.edge(e);
  if (in_s[ed.u] && in_s[ed.v]) return kNoVertex;
  return in_s[ed.u] ? ed.v : ed.u;
}

// c / (c + EC(v, S + wired; g_minus)) where g_minus already lacks e.
double inclusion_given(const Network& g_minus, double c, VertexId v, const std::vector<VertexId>& s,
                       const SolveOptions& opt) {
  std::vector<VertexId> sink = s;
  sink.push_back(*g_minus.wired_vertex());
  const VertexId src[] = {v};
  return c / (c + effective_conductance_tolerant(g_minus, src, sink, opt));
}

double conductance_out(const Network& g, const std::vector<VertexId>& s, const SolveOptions& opt) {
  const VertexId w[] = {*g.wired_vertex()};
  return effective_conductance_tolerant(g, s, w, opt);
}

// Key ordering edges of equal ball radius: sorted endpoint coordinates,
// then axis.
struct BallKey {
  int radius;
  std::vector<int> lo, hi;
  int axis;
  auto tie() const { return std::tie(radius, lo, hi, axis); }
  bool operator<(const BallKey& o) const { return tie() < o.tie(); }
};

BallKey ball_key(const Network& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  auto a = g.coords(ed.u), b = g.coords(ed.v);
  std::vector<int> x(a.begin(), a.end()), y(b.begin(), b.end());
  if (y < x) std::swap(x, y);
  int axis = 0;
  for (int i = 0; i < static_cast<int>(x.size()); ++i)
    if (x[i] != y[i]) axis = i;
  return {std::max(sup_norm(x), sup_norm(y)), std::move(x), std::move(y), axis};
}

void check_box(const Network& box, VertexId o) {
  if (!box.wired_vertex()) throw std::invalid_argument("exploration needs a wired box");
  if (o < 0 || o >= box.vertex_count() || box.is_wired(o)) throw std::invalid_argument("o must be a box vertex");
  if (!box.has_coords(o)) throw std::invalid_argument("exploration needs lattice coordinates");
}

}  // namespace

double conditional_inclusion_probability(const Network& box, std::span<const VertexId> s,
                                         std::span<const EdgeId> examined, EdgeId e,
                                         const SolveOptions& options) {
  const auto in_s = vertex_mask(box.vertex_count(), s);
  const VertexId v = outer_end(box, e, in_s);
  if (v == kNoVertex || box.is_wired(v)) return 0.0;
  std::vector<char> removed(box.edge_count(), 0);
  for (EdgeId f : examined) removed[f] = 1;
  removed[e] = 1;
  const Network rest = without(box, removed);
  return inclusion_given(rest, box.edge(e).conductance, v, std::vector<VertexId>(s.begin(), s.end()), options);
}

EscapeBoundReport escape_probability_bound_check(const Network& box, std::span<const VertexId> s,
                                                 std::span<const EdgeId> examined, EdgeId e,
                                                 const SolveOptions& options) {
  EscapeBoundReport rep;
  const auto in_s = vertex_mask(box.vertex_count(), s);
  const VertexId v = outer_end(box, e, in_s);
  if (v == kNoVertex || box.is_wired(v))
    throw std::invalid_argument("edge must join S to a vertex outside S and the wired vertex");
  rep.probability = conditional_inclusion_probability(box, s, examined, e, options);

  std::vector<char> removed(box.edge_count(), 0);
  for (EdgeId f : examined) removed[f] = 1;
  double pi_v = 0.0;
  for (const Incidence& inc : box.incident(v))
    if (!removed[inc.edge]) pi_v += box.edge(inc.edge).conductance;
  const double c = box.edge(e).conductance;
  rep.lower = c / pi_v;

  const Network rest = without(box, removed);
  const DeleteResult cut = delete_vertices(rest, s);
  const VertexId src[] = {cut.vertex_map[v]};
  const VertexId dst[] = {*cut.network.wired_vertex()};
  rep.alpha = effective_conductance_tolerant(cut.network, src, dst, options);
  rep.upper = c / (c + rep.alpha);
  const double slack = 1e-9;
  rep.lower_ok = rep.probability >= rep.lower - slack;
  rep.upper_ok = rep.probability <= rep.upper + slack;
  return rep;
}

ExplorationTrace exploration_process(const Network& box, VertexId o, RngStream& rng,
                                     const ExplorationOptions& options) {
  check_box(box, o);
  const VertexId w = *box.wired_vertex();
  const SolveOptions& opt = options.solve;

  ExplorationTrace trace;
  for (VertexId v = 0; v < box.vertex_count(); ++v)
    if (box.has_coords(v)) trace.truncation_radius = std::max(trace.truncation_radius, sup_norm(box.coords(v)));

  std::vector<char> examined(box.edge_count(), 0);
  std::vector<char> in_s(box.vertex_count(), 0);
  std::vector<VertexId> s{o};
  in_s[o] = 1;
  int forest_edges = 0;
  int last_min_radius = 0;

  Network current = box;
  double m = conductance_out(current, s, opt);
  trace.m0 = m;

  for (int n = 0;; ++n) {
    if (options.max_steps > 0 && n >= options.max_steps) {
      trace.truncated = true;
      break;
    }
    std::vector<EdgeId> candidates;
    bool boundary_left = false;
    for (VertexId x : s)
      for (const Incidence& inc : box.incident(x)) {
        if (examined[inc.edge]) continue;
        if (inc.neighbor == w) {
          boundary_left = true;
          continue;
        }
        candidates.push_back(inc.edge);
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    if (candidates.empty()) {
      trace.event_a = !boundary_left;
      trace.exhausted = boundary_left;
      break;
    }

    EdgeId chosen = kNoEdge;
    BallKey best_key{};
    for (EdgeId e : candidates) {
      BallKey k = ball_key(box, e);
      if (chosen == kNoEdge || k < best_key) {
        chosen = e;
        best_key = std::move(k);
      }
    }
    const bool at_n_r = best_key.radius > last_min_radius;
    last_min_radius = best_key.radius;
    bool by_current = false;
    if (options.rule == EdgeRule::max_current && at_n_r && m > 0.0) {
      const VertexId dst[] = {w};
      const VoltageSolution sol = harmonic_voltage(current, s, dst, opt);
      // `current` keeps box vertex ids, so voltages index directly.
      double top = -1.0;
      EdgeId pick = kNoEdge;
      for (EdgeId e : candidates) {
        const Edge& ed = box.edge(e);
        const double flow = ed.conductance * std::abs(sol.voltage(ed.u) - sol.voltage(ed.v));
        if (flow > top * (1.0 + 1e-9) + 1e-300) {
          top = flow;
          pick = e;
        }
      }
      if (pick != kNoEdge && top > 0.0) {
        chosen = pick;
        by_current = true;
      }
    }

    ExplorationStep step;
    step.n = n;
    step.edge = chosen;
    step.m_before = m;
    step.radius = ball_key(box, chosen).radius;
    step.at_n_r = at_n_r;
    step.by_current = by_current;

    examined[chosen] = 1;
    const Network next = without(box, examined);
    const VertexId v = outer_end(box, chosen, in_s);
    const double c = box.edge(chosen).conductance;
    step.probability = v == kNoVertex ? 0.0 : inclusion_given(next, c, v, s, opt);

    const double m_absent = conductance_out(next, s, opt);
    double m_present = m_absent;
    std::vector<VertexId> grown = s;
    if (v != kNoVertex) {
      grown.push_back(v);
      if (step.probability > 0.0) m_present = conductance_out(next, grown, opt);
    }
    step.m_expected = step.probability * m_present + (1.0 - step.probability) * m_absent;

    step.in_forest = step.probability >= 1.0 || (step.probability > 0.0 && rng.uniform01() < step.probability);
    if (step.in_forest) {
      s = std::move(grown);
      in_s[v] = 1;
      ++forest_edges;
      m = m_present;
    } else {
      m = m_absent;
    }
    step.m_after = m;
    step.s_size = static_cast<int>(s.size());
    step.s_version = forest_edges;
    trace.steps.push_back(step);
    current = next;
  }
  trace.final_s = s;
  std::sort(trace.final_s.begin(), trace.final_s.end());
  return trace;
}

}  // namespace wsf
