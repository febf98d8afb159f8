#include "wsf/verify.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "wsf/csv.hpp"
#include "wsf/domination.hpp"
#include "wsf/electrical.hpp"
#include "wsf/experiments.hpp"
#include "wsf/graph_catalog.hpp"
#include "wsf/isoperimetry.hpp"
#include "wsf/lattice.hpp"
#include "wsf/martingale.hpp"
#include "wsf/profile.hpp"
#include "wsf/rng.hpp"

namespace wsf {

namespace {

std::string num(double x) { return CsvWriter::number(x); }

std::string describe(const Network& g) {
  std::ostringstream os;
  os << g.vertex_count() << " vertices";
  if (g.wired_vertex()) os << ", wired " << *g.wired_vertex();
  os << ", edges";
  for (const Edge& e : g.edges()) {
    os << ' ' << e.u << '-' << e.v;
    if (e.conductance != 1.0) os << ':' << num(e.conductance);
  }
  return os.str();
}

std::string reproduce(const std::string& suite, const VerifyOptions& o) {
  return "reproduce: wsf-lab verify " + suite + " --seed " + std::to_string(o.seed);
}

void fail(VerifyReport& rep, const VerifyOptions& o, const std::string& what) {
  rep.passed = false;
  if (rep.failures.size() < 50) rep.failures.push_back(what + "; " + reproduce(rep.suite, o));
}

// ---------------------------------------------------------------------------

VerifyReport suite_martingale(const VerifyOptions& o) {
  VerifyReport rep;
  rep.suite = "martingale";
  SolveOptions solve;
  solve.method = SolveMethod::direct;
  const MartingaleSweep s = martingale_catalog_sweep(6, solve);
  rep.instances = s.instances;
  rep.max_discrepancy = s.max_discrepancy;
  rep.details.push_back(std::to_string(s.graphs) + " graphs, " + std::to_string(s.instances) +
                        " (graph, wired, o) instances, " + std::to_string(s.pairs) + " (E0, E1) pairs, " +
                        std::to_string(s.configurations) + " configurations");
  rep.details.push_back("max |E[M1 | F on E0] - M0| = " + num(s.max_discrepancy) + " at " + s.worst);
  if (!(s.max_discrepancy <= 1e-9)) fail(rep, o, "discrepancy " + num(s.max_discrepancy) + " at " + s.worst);
  rep.columns = {"graphs", "instances", "pairs", "configurations", "max_discrepancy"};
  rep.rows.push_back({std::to_string(s.graphs), std::to_string(s.instances), std::to_string(s.pairs),
                      std::to_string(s.configurations), num(s.max_discrepancy)});
  return rep;
}

VerifyReport suite_domination(const VerifyOptions& o) {
  VerifyReport rep;
  rep.suite = "domination";
  rep.columns = {"graph", "x", "y", "feasible", "transported", "lower_mean_size", "upper_mean_size"};
  const auto graphs = connected_graphs_by_vertices(4);
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const Network g = graphs[gi].to_network();
    for (VertexId x = 0; x < g.vertex_count(); ++x)
      for (VertexId y = 0; y < g.vertex_count(); ++y) {
        if (x == y) continue;
        const DominationReport d = domination_check(g, x, y);
        ++rep.instances;
        rep.max_discrepancy = std::max(rep.max_discrepancy, 1.0 - d.transported);
        rep.rows.push_back({describe(g), std::to_string(x), std::to_string(y), d.feasible ? "1" : "0",
                            num(d.transported), num(d.lower.expected_size()), num(d.upper.expected_size())});
        if (!d.feasible)
          fail(rep, o, "no monotone coupling on " + describe(g) + ", x " + std::to_string(x) + ", y " +
                           std::to_string(y) + ", transported " + num(d.transported));
      }
  }
  rep.details.push_back(std::to_string(graphs.size()) + " graphs, " + std::to_string(rep.instances) +
                        " ordered pairs; max untransported mass " + num(rep.max_discrepancy));
  return rep;
}

VerifyReport suite_bounds(const VerifyOptions& o) {
  VerifyReport rep;
  rep.suite = "bounds";
  rep.columns = {"instance", "a", "z", "exact", "bound"};
  SolveOptions solve;
  solve.method = SolveMethod::direct;
  double worst_ratio = kInfinity;
  auto check = [&](const std::string& name, const Network& g) {
    for (VertexId a = 0; a < g.vertex_count(); ++a)
      for (VertexId z = 0; z < g.vertex_count(); ++z) {
        if (a == z) continue;
        const FiniteHsResult r = finite_hs_bound(g, a, z, 20, solve);
        ++rep.instances;
        worst_ratio = std::min(worst_ratio, r.bound / r.exact);
        rep.rows.push_back({name, std::to_string(a), std::to_string(z), num(r.exact), num(r.bound)});
        if (!(r.bound >= r.exact))
          fail(rep, o, "bound " + num(r.bound) + " < ER " + num(r.exact) + " on " + describe(g) + ", a " +
                           std::to_string(a) + ", z " + std::to_string(z));
      }
  };
  const auto graphs = connected_graphs_by_vertices(6);
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) check("catalog:" + std::to_string(gi), graphs[gi].to_network());
  for (int i = 0; i < 20; ++i) {
    RngStream rng(o.seed, 0xB0D5'0000u + i);
    check("random8:" + std::to_string(i), random_network(8, 0.3, rng, 0.5, 2.0));
  }
  rep.details.push_back(std::to_string(rep.instances) + " (network, a, z) instances over " +
                        std::to_string(graphs.size()) + " catalog graphs and 20 random 8-vertex networks");
  rep.details.push_back("least bound / ER = " + num(worst_ratio));

  const HsBound linear = hs_resistance_bound(Profile::power(1.0, 1.0), 1.0);
  const double gap = std::abs(linear.value - 6.0);
  rep.max_discrepancy = gap;
  rep.details.push_back("kappa(t) = t, s0 = 1: bound " + num(linear.value) + " (|bound - 6| = " + num(gap) + ")");
  if (!(gap <= 1e-12)) fail(rep, o, "kappa(t) = t gives " + num(linear.value) + ", expected 6");

  // The sum never exceeds the integral comparison.
  for (const char* preset : {"zd:3", "zd:4", "t23"})
    for (double s0 : {2.0, 6.0, 50.0}) {
      const Profile p = Profile::preset(preset);
      const HsBound b = hs_resistance_bound(p, s0);
      const double integral = integral_bound(p.coefficient(), p.exponent(), s0);
      ++rep.instances;
      rep.details.push_back(std::string(preset) + ", s0 = " + num(s0) + ": sum " + num(b.value) + " <= integral " +
                            num(integral));
      if (!(b.value <= integral))
        fail(rep, o, std::string("sum exceeds the integral for ") + preset + " at s0 = " + num(s0));
    }
  return rep;
}

VerifyReport suite_good_subset(const VerifyOptions& o) {
  VerifyReport rep;
  rep.suite = "good-subset";
  rep.columns = {"instance", "K", "W", "W_connected", "worst_ratio", "holds"};
  double worst = kInfinity;
  auto check = [&](const std::string& name, const Network& g) {
    const VertexId w = *g.wired_vertex();
    std::vector<std::vector<VertexId>> ks;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (v != w) ks.push_back({v});
    for (const Edge& e : g.edges())
      if (e.u != w && e.v != w) ks.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    for (const auto& k : ks) {
      const GoodSubsetResult gs = good_subset(g, k);
      const GoodSubsetInequality in = good_subset_inequality(g, gs.w);
      ++rep.instances;
      worst = std::min(worst, in.worst_ratio);
      std::string ks_text, ws_text;
      for (VertexId v : k) ks_text += (ks_text.empty() ? "" : " ") + std::to_string(v);
      for (VertexId v : gs.w) ws_text += (ws_text.empty() ? "" : " ") + std::to_string(v);
      const bool ok = in.holds && gs.certificate_ok;
      rep.rows.push_back({name, ks_text, ws_text, gs.connected ? "1" : "0", num(in.worst_ratio), ok ? "1" : "0"});
      if (!ok)
        fail(rep, o, "inequality fails on " + describe(g) + ", K {" + ks_text + "}, W {" + ws_text + "}, t " +
                         num(in.worst_t) + ", ratio " + num(in.worst_ratio));
    }
  };
  const auto graphs = connected_graphs_by_vertices(6);
  for (std::size_t gi = 0; gi < graphs.size(); ++gi)
    for (VertexId w = 0; w < graphs[gi].vertex_count; ++w)
      check("catalog:" + std::to_string(gi) + "/wired:" + std::to_string(w), graphs[gi].to_network(w));
  check("Z2 r=1 wired", build_lattice_box({2, 1, BoundaryMode::wired}));
  check("Z1 r=5 wired", build_lattice_box({1, 5, BoundaryMode::wired}));
  for (int i = 0; i < 10; ++i) {
    RngStream rng(o.seed, 0x6005'0000u + i);
    const Network r = random_network(12, 0.15, rng, 0.5, 2.0);
    check("random12:" + std::to_string(i),
          Network(r.vertex_count(), r.edges(), VertexId{11}));
  }
  rep.max_discrepancy = std::max(0.0, 0.5 - worst);
  rep.details.push_back(std::to_string(rep.instances) + " (network, K) instances on wired networks with at most 12 "
                        "vertices; least kappa(G \\ W, t) / kappa(G, t) = " + num(worst));
  return rep;
}

VerifyReport suite_electrical(const VerifyOptions& o) {
  VerifyReport rep;
  rep.suite = "electrical-identities";
  rep.columns = {"check", "instance", "residual"};
  SolveOptions solve;
  solve.method = SolveMethod::direct;
  double ibp = 0.0, duality = 0.0, series = 0.0;
  auto record = [&](const std::string& check, const std::string& inst, double res, double tol, double& worst) {
    ++rep.instances;
    worst = std::max(worst, res);
    rep.rows.push_back({check, inst, num(res)});
    if (!(res <= tol)) fail(rep, o, check + " residual " + num(res) + " on " + inst);
  };

  for (int i = 0; i < 100; ++i) {
    RngStream rng(o.seed, 0xE1EC'0000u + i);
    const int n = 2 + static_cast<int>(rng.bounded(49));
    const Network g = random_network(n, std::min(1.0, 3.0 / n), rng, 0.1, 10.0);
    std::vector<double> f(n), th(g.edge_count());
    for (double& x : f) x = 2.0 * rng.uniform01() - 1.0;
    for (double& x : th) x = 2.0 * rng.uniform01() - 1.0;
    const Potential pf(g, f);
    const Flow flow(g, th);
    double lhs = Flow::gradient_of(pf).inner(flow);
    for (VertexId v = 0; v < n; ++v) lhs += f[v] * flow.divergence(v);
    record("ibp", "random:" + std::to_string(i) + " (" + std::to_string(n) + " vertices)", std::abs(lhs), 1e-9, ibp);

    const VertexId a[] = {static_cast<VertexId>(rng.bounded(n))};
    VertexId bv = static_cast<VertexId>(rng.bounded(n - 1));
    if (bv >= a[0]) ++bv;
    const VertexId b[] = {bv};
    const double ec = harmonic_voltage(g, a, b, solve).voltage.dirichlet_energy();
    const double er = unit_current_flow(g, a, b, solve).energy();
    record("EC*ER", "random:" + std::to_string(i), std::abs(ec * er - 1.0), 1e-9, duality);
  }

  for (int i = 0; i < 20; ++i) {
    RngStream rng(o.seed, 0x5E21'0000u + i);
    const int k = 1 + static_cast<int>(rng.bounded(12));
    std::vector<Edge> path, bundle;
    double r_sum = 0.0, c_sum = 0.0;
    for (int j = 0; j < k; ++j) {
      const double c = 0.1 + 9.9 * rng.uniform01();
      path.push_back({j, j + 1, c});
      r_sum += 1.0 / c;
      const double d = 0.1 + 9.9 * rng.uniform01();
      bundle.push_back({0, 1, d});
      c_sum += d;
    }
    const Network p(k + 1, path), q(2, bundle);
    const VertexId s[] = {0}, t[] = {k}, t1[] = {1};
    const double er = effective_resistance(p, s, t, solve);
    record("series", std::to_string(k) + " edges", std::abs(er - r_sum) / r_sum, 1e-10, series);
    const double ec = effective_conductance(q, s, t1, solve);
    record("parallel", std::to_string(k) + " edges", std::abs(ec - c_sum) / c_sum, 1e-10, series);
  }
  rep.max_discrepancy = std::max({ibp, duality, series});
  rep.details.push_back("integration by parts on 100 random networks: max residual " + num(ibp));
  rep.details.push_back("EC * ER = 1: max |EC ER - 1| " + num(duality));
  rep.details.push_back("series / parallel laws: max relative error " + num(series));
  return rep;
}

VerifyReport suite_kirchhoff(const VerifyOptions& o) {
  VerifyReport rep;
  rep.suite = "kirchhoff";
  rep.columns = {"graph", "edge", "expected", "observed", "z"};
  const int workers = o.workers > 0 ? o.workers : default_worker_count();
  auto add = [&](const KirchhoffReport& k) {
    for (const EdgeFrequency& f : k.edges)
      rep.rows.push_back({k.graph, std::to_string(f.edge), num(f.expected), num(f.observed), num(f.z)});
    rep.max_discrepancy = std::max(rep.max_discrepancy, k.max_abs_z);
    ++rep.instances;
    std::string line = k.graph + ": " + std::to_string(k.samples) + " draws, max |z| " + num(k.max_abs_z);
    if (k.tree_tv >= 0.0) line += ", tree-law TV " + num(k.tree_tv) + " over " + std::to_string(k.trees) + " trees";
    rep.details.push_back(line);
    if (!(k.max_abs_z <= 5.0)) fail(rep, o, k.graph + ": max |z| " + num(k.max_abs_z) + " > 5");
  };

  const Network triangle(3, {{0, 1, 2.0}, {1, 2, 1.0}, {0, 2, 1.0}});
  const KirchhoffReport tri =
      kirchhoff_validation(triangle, o.triangle_samples, o.seed, o.execution, workers, "triangle (2,1,1)");
  add(tri);
  if (!(tri.tree_tv <= 0.005)) fail(rep, o, "triangle tree-law TV " + num(tri.tree_tv) + " > 0.005");

  std::vector<Edge> k4;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k4.push_back({u, v, 1.0});
  add(kirchhoff_validation(Network(4, k4), o.kirchhoff_samples, o.seed + 1, o.execution, workers, "K4"));
  add(kirchhoff_validation(build_lattice_box({2, 1, BoundaryMode::wired}), o.kirchhoff_samples, o.seed + 2,
                           o.execution, workers, "3x3 wired box"));

  const Network bridge(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}, {2, 3, 0.5}});
  const KirchhoffReport br = kirchhoff_validation(bridge, 1000, o.seed + 3, o.execution, workers, "triangle + bridge");
  add(br);
  if (br.edges[3].observed != 1.0) fail(rep, o, "bridge frequency " + num(br.edges[3].observed) + " != 1");
  return rep;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"martingale",           "domination", "bounds", "good-subset",
                                                 "electrical-identities", "kirchhoff"};
  return names;
}

VerifyReport verify_suite(const std::string& name, const VerifyOptions& options) {
  if (name == "martingale") return suite_martingale(options);
  if (name == "domination") return suite_domination(options);
  if (name == "bounds") return suite_bounds(options);
  if (name == "good-subset") return suite_good_subset(options);
  if (name == "electrical-identities") return suite_electrical(options);
  if (name == "kirchhoff") return suite_kirchhoff(options);
  throw std::invalid_argument("unknown verify suite '" + name + "'");
}

void write_verify_csv(const VerifyReport& rep, std::ostream& out) {
  CsvWriter w(out);
  w.metadata("suite", rep.suite);
  w.metadata("passed", rep.passed ? "true" : "false");
  w.metadata("instances", static_cast<double>(rep.instances));
  w.metadata("max_discrepancy", rep.max_discrepancy);
  w.header(rep.columns);
  for (const auto& r : rep.rows) w.row(r);
}

void print_verify_report(const VerifyReport& rep, std::ostream& out) {
  out << (rep.passed ? "PASS " : "FAIL ") << rep.suite << ": " << rep.instances
      << " instances, max discrepancy " << num(rep.max_discrepancy) << '\n';
  for (const auto& d : rep.details) out << "  " << d << '\n';
  for (const auto& f : rep.failures) out << "  failure: " << f << '\n';
}

}  // namespace wsf
