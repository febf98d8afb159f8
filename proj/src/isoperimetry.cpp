#include "wsf/isoperimetry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "wsf/electrical.hpp"
#include "wsf/error.hpp"
#include "wsf/lattice.hpp"

namespace wsf {

BoundaryVariant parse_boundary_variant(const std::string& text) {
  if (text == "edge") return BoundaryVariant::edge;
  if (text == "infinite") return BoundaryVariant::infinite;
  throw std::invalid_argument("unknown boundary variant '" + text + "' (expected edge or infinite)");
}

namespace {

VertexMask all_vertices(const Network& g) {
  return g.vertex_count() == 64 ? ~VertexMask{0} : (VertexMask{1} << g.vertex_count()) - 1;
}

void check_cap(const Network& g, int cap) {
  if (g.vertex_count() > cap || g.vertex_count() > 64)
    throw ResourceError("exhaustive search over " + std::to_string(g.vertex_count()) +
                        " vertices exceeds the cap of " + std::to_string(cap));
}

double pi_of(const Network& g, VertexMask k, PiConvention convention) {
  const auto m = members(k);
  return pi(g, m, convention);
}

// Vertices reachable from the wired vertex without entering K.
VertexMask infinite_side(const Network& g, VertexMask k) {
  const VertexId w = *g.wired_vertex();
  VertexMask seen = VertexMask{1} << w;
  std::vector<VertexId> stack{w};
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.incident(x)) {
      const VertexMask bit = VertexMask{1} << inc.neighbor;
      if ((seen & bit) || (k & bit)) continue;
      seen |= bit;
      stack.push_back(inc.neighbor);
    }
  }
  return seen;
}

// Least boundary per distinct pi value, folded into suffix minima.
Profile fold(std::map<double, double>& best) {
  std::vector<double> t, v;
  for (const auto& [p, b] : best) {
    t.push_back(p);
    v.push_back(b);
  }
  for (int i = static_cast<int>(v.size()) - 2; i >= 0; --i) v[i] = std::min(v[i], v[i + 1]);
  return Profile::table(std::move(t), std::move(v));
}

void offer(std::map<double, double>& best, double p, double b) {
  auto [it, fresh] = best.try_emplace(p, b);
  if (!fresh) it->second = std::min(it->second, b);
}

}  // namespace

double boundary_conductance(const Network& g, VertexMask k, BoundaryVariant variant) {
  VertexMask far = 0;
  if (variant == BoundaryVariant::infinite) {
    if (!g.wired_vertex()) throw std::invalid_argument("infinite-boundary variant needs a wired vertex");
    far = infinite_side(g, k);
  }
  double s = 0.0;
  for (const Edge& e : g.edges()) {
    const bool iu = contains(k, e.u), iv = contains(k, e.v);
    if (iu == iv) continue;
    const VertexId out = iu ? e.v : e.u;
    if (variant == BoundaryVariant::infinite && !contains(far, out)) continue;
    s += e.conductance;
  }
  return s;
}

Profile profile_table(const Network& g, std::span<const VertexId> a, const ProfileOptions& options) {
  check_cap(g, options.vertex_cap);
  VertexMask allowed = all_vertices(g);
  if (g.wired_vertex()) allowed &= ~(VertexMask{1} << *g.wired_vertex());
  const VertexMask required = mask_of(a);
  std::map<double, double> best;
  for_each_connected_subset(
      g, allowed, required,
      [&](VertexMask k) {
        if (k == all_vertices(g)) return;
        offer(best, pi_of(g, k, options.convention), boundary_conductance(g, k, options.variant));
      },
      options.vertex_cap);
  return fold(best);
}

double profile_brute(const Network& g, std::span<const VertexId> a, double t, const ProfileOptions& options) {
  const Profile p = profile_table(g, a, options);
  if (p.thresholds().empty()) return kInfinity;
  return p(t);
}

FiniteHsResult finite_hs_bound(const Network& g, VertexId a, VertexId z, int vertex_cap,
                               const SolveOptions& options) {
  if (a == z) throw std::invalid_argument("a and z must differ");
  if (a < 0 || z < 0 || a >= g.vertex_count() || z >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
  if (!g.is_connected()) throw std::invalid_argument("network must be connected");
  check_cap(g, vertex_cap);
  const VertexMask allowed = all_vertices(g) & ~(VertexMask{1} << z);
  std::map<double, double> best;
  for_each_connected_subset(
      g, allowed, VertexMask{1} << a,
      [&](VertexMask k) { offer(best, pi_of(g, k, PiConvention::oriented_tail), boundary_conductance(g, k, BoundaryVariant::edge)); },
      vertex_cap);
  const Profile kappa = fold(best);

  FiniteHsResult out;
  double s = g.pi(a);
  while (true) {
    const double k = kappa(s);
    if (k == kInfinity) break;
    out.s.push_back(s);
    out.kappa.push_back(k);
    out.bound += 2.0 / k;
    s += k / 2.0;
  }
  const VertexId va[] = {a};
  const VertexId vz[] = {z};
  out.exact = effective_resistance(g, va, vz, options);
  out.holds = out.bound >= out.exact;
  return out;
}

GoodSubsetResult good_subset(const Network& g, std::span<const VertexId> k, int vertex_cap) {
  check_cap(g, vertex_cap);
  if (k.empty()) throw std::invalid_argument("K must be nonempty");
  const VertexMask kmask = mask_of(k);
  VertexMask wired_bit = 0;
  if (g.wired_vertex()) wired_bit = VertexMask{1} << *g.wired_vertex();
  if (kmask & wired_bit) throw std::invalid_argument("K must avoid the wired vertex");
  const auto nb = neighbor_masks(g);
  VertexMask core = kmask;
  for (VertexId v : members(kmask)) core |= nb[v];
  core &= ~wired_bit;
  const VertexMask free = all_vertices(g) & ~core & ~wired_bit;

  GoodSubsetResult out;
  VertexMask best = 0;
  double best_b = kInfinity;
  // All subsets of the free vertices, added to the core.
  for (VertexMask extra = free;; extra = (extra - 1) & free) {
    const VertexMask l = core | extra;
    if (l != all_vertices(g)) {
      const double b = boundary_conductance(g, l, BoundaryVariant::edge);
      const bool better = b < best_b || (b == best_b && (std::popcount(l) < std::popcount(best) ||
                                                          (std::popcount(l) == std::popcount(best) && l < best)));
      if (better) {
        best_b = b;
        best = l;
      }
    }
    if (extra == 0) break;
  }
  if (best == 0) throw std::invalid_argument("no proper superset of K and its neighbors exists");
  out.w = members(best);
  out.boundary = best_b;
  {
    VertexMask reach = best & -best;
    for (bool grew = true; grew;) {
      grew = false;
      for (VertexId v : members(reach)) {
        const VertexMask add = nb[v] & best & ~reach;
        if (add) {
          reach |= add;
          grew = true;
        }
      }
    }
    out.connected = reach == best;
  }

  const VertexMask outside = all_vertices(g) & ~best & ~wired_bit;
  for (VertexMask u = outside; u; u = (u - 1) & outside) {
    double full = 0.0, kept = 0.0;
    for (const Edge& e : g.edges()) {
      const bool iu = contains(u, e.u), iv = contains(u, e.v);
      if (iu == iv) continue;
      const VertexId other = iu ? e.v : e.u;
      full += e.conductance;
      if (!contains(best, other)) kept += e.conductance;
    }
    ++out.certificate_sets;
    if (full > 0.0) out.worst_ratio = std::min(out.worst_ratio, kept / full);
    if (kept < full / 2.0) out.certificate_ok = false;
  }
  return out;
}

GoodSubsetInequality good_subset_inequality(const Network& g, std::span<const VertexId> w, int vertex_cap) {
  const DeleteResult rest = delete_vertices(g, w);
  ProfileOptions opt;
  opt.vertex_cap = vertex_cap;
  const Profile full = profile_table(g, {}, opt);
  const Profile cut = profile_table(rest.network, {}, opt);
  std::vector<double> points = full.thresholds();
  points.insert(points.end(), cut.thresholds().begin(), cut.thresholds().end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  GoodSubsetInequality out;
  for (double t : points) {
    const double a = cut(t), b = full(t);
    ++out.breakpoints;
    const double ratio = b == kInfinity ? (a == kInfinity ? kInfinity : 0.0) : (b > 0 ? a / b : kInfinity);
    if (ratio < out.worst_ratio) {
      out.worst_ratio = ratio;
      out.worst_t = t;
    }
    if (!(a >= b / 2.0)) out.holds = false;
  }
  return out;
}

ConditionReport condition_diagnostics(int dimension, std::span<const int> radii, double inner_fraction,
                                      const SolveOptions& options) {
  ConditionReport rep;
  rep.dimension = dimension;
  for (int r : radii) {
    const Network box = build_lattice_box({dimension, r, BoundaryMode::wired});
    const int inner = static_cast<int>(std::floor(r * inner_fraction));
    std::vector<VertexId> vn;
    for (VertexId v = 0; v < box.vertex_count(); ++v)
      if (box.has_coords(v) && sup_norm(box.coords(v)) <= inner) vn.push_back(v);
    const DeleteResult cut = delete_vertices(box, vn);
    const Network& h = cut.network;
    const VertexId w = *h.wired_vertex();
    auto at = [&](std::vector<int> x) { return cut.vertex_map[lattice_index(dimension, r, x)]; };

    ConditionRow row;
    row.radius = r;
    row.vertex_min = kInfinity;
    std::vector<int> distances{inner + 1, (inner + 1 + r) / 2, r};
    for (int dist : distances) {
      std::vector<int> axis(dimension, 0), diag(dimension, dist);
      axis[0] = dist;
      for (const auto& x : {axis, diag}) {
        const VertexId v = at(x);
        if (v == kNoVertex) continue;
        const VertexId src[] = {v};
        const VertexId dst[] = {w};
        row.vertex_min = std::min(row.vertex_min, effective_conductance_tolerant(h, src, dst, options));
      }
    }
    // Cubes of growing side centered on the first axis just outside V_n.
    for (int rho = 0;; ++rho) {
      const int centre = inner + 1 + rho;
      if (centre + rho > r) break;
      std::vector<VertexId> k;
      for (VertexId v = 0; v < box.vertex_count(); ++v) {
        if (!box.has_coords(v) || cut.vertex_map[v] == kNoVertex) continue;
        const auto x = box.coords(v);
        bool in = std::abs(x[0] - centre) <= rho;
        for (int i = 1; i < dimension && in; ++i) in = std::abs(x[i]) <= rho;
        if (in) k.push_back(cut.vertex_map[v]);
      }
      const VertexId dst[] = {w};
      row.band_pi.push_back(pi(h, k));
      row.band_conductance.push_back(effective_conductance_tolerant(h, k, dst, options));
    }
    rep.rows.push_back(std::move(row));
  }
  rep.vertex_bounded_below = !rep.rows.empty();
  for (const auto& row : rep.rows)
    if (!(row.vertex_min >= rep.rows.front().vertex_min / 2.0)) rep.vertex_bounded_below = false;
  rep.bands_increasing = !rep.rows.empty();
  for (const auto& row : rep.rows)
    for (std::size_t i = 1; i < row.band_conductance.size(); ++i)
      if (!(row.band_conductance[i] > row.band_conductance[i - 1])) rep.bands_increasing = false;
  return rep;
}

}  // namespace wsf
