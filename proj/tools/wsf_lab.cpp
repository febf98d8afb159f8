// wsf-lab: command-line front end for the sampling, electrical and
// isoperimetric tools. Exit codes: 0 pass, 1 assertion failure, 2 usage error.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "wsf/csv.hpp"
#include "wsf/edge_list_io.hpp"
#include "wsf/electrical.hpp"
#include "wsf/error.hpp"
#include "wsf/experiments.hpp"
#include "wsf/isoperimetry.hpp"
#include "wsf/lattice.hpp"
#include "wsf/profile.hpp"
#include "wsf/sampling.hpp"
#include "wsf/verify.hpp"

namespace {

using namespace wsf;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  for (const auto& s : split(text, ',')) {
    std::size_t used = 0;
    const double x = std::stod(s, &used);
    if (used != s.size()) throw UsageError("not a number: '" + s + "'");
    out.push_back(x);
  }
  return out;
}

std::vector<VertexId> parse_vertices(const Network& g, const std::string& text) {
  std::vector<VertexId> out;
  for (const auto& s : split(text, ',')) out.push_back(find_vertex(g, s));
  if (out.empty()) throw UsageError("empty vertex list");
  return out;
}

/// "d,r" or "d,r,MODE".
LatticeBoxSpec parse_lattice(const std::string& text, bool with_mode) {
  const auto parts = split(text, ',');
  if (parts.size() != (with_mode ? 3u : 2u) && !(with_mode && parts.size() == 2))
    throw UsageError("--lattice expects " + std::string(with_mode ? "d,r[,MODE]" : "d,r"));
  LatticeBoxSpec spec;
  try {
    spec.dimension = std::stoi(parts[0]);
    spec.radius = std::stoi(parts[1]);
  } catch (const std::exception&) {
    throw UsageError("--lattice expects integers d,r");
  }
  spec.mode = parts.size() == 3 ? parse_boundary_mode(parts[2]) : BoundaryMode::wired;
  return spec;
}

/// Output stream for --out: a file, or stdout when empty or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw UsageError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string join_labels(const std::vector<std::int64_t>& labels) {
  std::string s;
  for (std::int64_t l : labels) s += (s.empty() ? "" : " ") + std::to_string(l);
  return s;
}

// ---------------------------------------------------------------------------

struct SampleArgs {
  std::string graph, lattice, root, out;
  std::int64_t samples = 1;
  std::uint64_t seed = 1;
  int workers = 0;
};

int run_sample(const SampleArgs& a) {
  if (a.graph.empty() == a.lattice.empty()) throw UsageError("give exactly one of --graph and --lattice");
  const int workers = a.workers > 0 ? a.workers : default_worker_count();
  struct Row {
    std::string edges;
    std::int64_t size = 0;
  };
  std::vector<Row> rows;
  std::string source;

  if (!a.lattice.empty() && parse_lattice(a.lattice, true).mode == BoundaryMode::wired_root_origin) {
    const LatticeBoxSpec spec = parse_lattice(a.lattice, true);
    source = "lattice " + a.lattice;
    const std::vector<int> o(spec.dimension, 0);
    rows = run_samples<Row>(
        a.samples, Execution::parallel, workers, [&] { return RootWiredSampler(spec.dimension, spec.radius, o); },
        [&](RootWiredSampler& s, std::int64_t i) {
          RngStream rng(a.seed, static_cast<std::uint64_t>(i));
          const RootWiredSample x = s.sample(rng);
          return Row{join_labels(x.tree.labels()), static_cast<std::int64_t>(x.origin_component.size())};
        });
  } else {
    Network g;
    VertexId root = 0;
    if (!a.graph.empty()) {
      g = read_edge_list_file(a.graph);
      source = "graph " + a.graph;
      if (!a.root.empty()) root = find_vertex(g, a.root);
    } else {
      const LatticeBoxSpec spec = parse_lattice(a.lattice, true);
      g = build_lattice_box(spec);
      source = "lattice " + a.lattice;
      root = lattice_origin(spec.dimension, spec.radius);
      if (!a.root.empty()) root = find_vertex(g, a.root);
    }
    const VertexId wired = g.wired_vertex() ? *g.wired_vertex() : kNoVertex;
    struct Worker {
      WilsonSampler wilson;
      std::vector<EdgeId> parents;
    };
    rows = run_samples<Row>(
        a.samples, Execution::parallel, workers, [&] { return Worker{WilsonSampler(g), {}}; },
        [&](Worker& w, std::int64_t i) {
          RngStream rng(a.seed, static_cast<std::uint64_t>(i));
          // Rooted at the wired vertex when there is one; the law does not
          // depend on the root.
          w.wilson.sample(wired != kNoVertex ? wired : root, rng, w.parents);
          std::vector<std::int64_t> labels;
          UnionFind uf(g.vertex_count());
          for (EdgeId e : w.parents) {
            if (e == kNoEdge) continue;
            labels.push_back(g.edge(e).label);
            const Edge& ed = g.edge(e);
            if (ed.u != wired && ed.v != wired) uf.unite(ed.u, ed.v);
          }
          std::sort(labels.begin(), labels.end());
          std::int64_t size = 0;
          for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (v != wired && uf.find(v) == uf.find(root)) ++size;
          if (root == wired) size = g.vertex_count();
          return Row{join_labels(labels), size};
        });
  }
  Output out(a.out);
  CsvWriter w(out.stream());
  w.metadata("command", "sample");
  w.metadata("source", source);
  w.metadata("seed", std::to_string(a.seed));
  w.header({"sample", "edges", "origin_component_size"});
  for (std::size_t i = 0; i < rows.size(); ++i)
    w.row({std::to_string(i), rows[i].edges, std::to_string(rows[i].size)});
  return kPass;
}

struct ResistanceArgs {
  std::string graph, sources, targets, out;
  bool wired = false;
  double tol = 1e-10;
};

int run_resistance(const ResistanceArgs& a) {
  const Network g = read_edge_list_file(a.graph);
  const auto src = parse_vertices(g, a.sources);
  std::vector<VertexId> dst;
  if (a.wired) {
    if (!g.wired_vertex()) throw UsageError("--wired given but the graph has no @wired vertex");
    if (!a.targets.empty()) throw UsageError("--wired replaces --target-set");
    dst.push_back(*g.wired_vertex());
  } else {
    if (a.targets.empty()) throw UsageError("give --target-set or --wired");
    dst = parse_vertices(g, a.targets);
  }
  SolveOptions opt;
  opt.tolerance = a.tol;
  SolveStats stats;
  const double ec = effective_conductance(g, src, dst, opt, &stats);
  Output out(a.out);
  CsvWriter w(out.stream());
  w.header({"ER", "EC", "iterations"});
  w.row({CsvWriter::number(1.0 / ec), CsvWriter::number(ec), std::to_string(stats.iterations)});
  return kPass;
}

struct ProfileArgs {
  std::string graph, set, variant = "edge", grid, out, convention = "oriented-tail";
};

int run_profile(const ProfileArgs& a) {
  const Network g = read_edge_list_file(a.graph);
  ProfileOptions opt;
  opt.variant = parse_boundary_variant(a.variant);
  if (a.convention == "oriented-tail") opt.convention = PiConvention::oriented_tail;
  else if (a.convention == "incident-edges") opt.convention = PiConvention::incident_edges;
  else throw UsageError("--pi must be oriented-tail or incident-edges");
  std::vector<VertexId> set;
  if (!a.set.empty()) set = parse_vertices(g, a.set);
  const auto grid = parse_doubles(a.grid);
  if (grid.empty()) throw UsageError("--t-grid is empty");
  const Profile p = profile_table(g, set, opt);
  Output out(a.out);
  CsvWriter w(out.stream());
  w.metadata("variant", a.variant);
  w.header({"t", "kappa"});
  for (double t : grid) w.row({CsvWriter::number(t), CsvWriter::number(p(t))});
  return kPass;
}

struct BoundArgs {
  std::string preset, table, out;
  double s0 = 1.0;
  double tol = 1e-12;
  double pi_a = 0.0;
};

Profile read_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open table '" + path + "'");
  std::vector<double> th, va;
  for (std::string line; std::getline(in, line);) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    double t, k;
    if (!(ls >> t)) continue;
    if (!(ls >> k)) throw UsageError("table rows need 'threshold value'");
    th.push_back(t);
    va.push_back(k);
  }
  return Profile::table(th, va);
}

int run_bound(const BoundArgs& a) {
  if (a.preset.empty() == a.table.empty()) throw UsageError("give exactly one of --preset and --table");
  const Profile p = a.preset.empty() ? read_table(a.table) : Profile::preset(a.preset);
  const HsBound b = hs_resistance_bound(p, a.s0, a.tol);
  Output out(a.out);
  CsvWriter w(out.stream());
  std::vector<std::string> cols{"profile", "s0", "bound", "partial_sum", "tail_bound", "terms", "status"};
  std::vector<std::string> row{a.preset.empty() ? "table:" + a.table : a.preset,
                               CsvWriter::number(a.s0),
                               CsvWriter::number(b.value),
                               CsvWriter::number(b.partial_sum),
                               CsvWriter::number(b.tail_bound),
                               std::to_string(b.terms),
                               to_string(b.status)};
  if (a.pi_a > 0.0 && p.kind() == Profile::Kind::power) {
    cols.push_back("integral_bound");
    row.push_back(CsvWriter::number(integral_bound(p.coefficient(), p.exponent(), a.pi_a)));
  }
  w.header(cols);
  w.row(row);
  return kPass;
}

struct ExperimentArgs {
  std::string config, lattice, rule = "ball-min", out, window;
  std::int64_t samples = 0;
  std::uint64_t seed = 1;
  int workers = 0;
  bool serial = false;
};

ExperimentConfig config_from(const ExperimentArgs& a, const std::string& experiment) {
  ExperimentConfig cfg;
  if (!a.config.empty()) {
    if (!a.lattice.empty()) throw UsageError("--config and --lattice are exclusive");
    cfg = load_config(a.config);
  } else {
    cfg.experiment = experiment;
    if (a.lattice.empty()) throw UsageError("give --config or --lattice");
    cfg.lattice = parse_lattice(a.lattice, false);
    cfg.seed = a.seed;
    if (a.samples > 0) cfg.samples = a.samples;
    cfg.rule = parse_edge_rule(a.rule);
    if (!a.window.empty()) {
      const auto w = parse_doubles(a.window);
      if (w.size() != 2) throw UsageError("--fit-window expects lo,hi");
      cfg.fit_lo = w[0];
      cfg.fit_hi = w[1];
    }
  }
  if (a.workers > 0) cfg.workers = a.workers;
  if (a.serial) cfg.execution = Execution::serial;
  if (!a.out.empty()) cfg.output = a.out;
  cfg.validate();
  return cfg;
}

int run_tail(const ExperimentArgs& a) {
  const ExperimentConfig cfg = config_from(a, "tail");
  if (cfg.experiment != "tail") {
    Output out(cfg.output);
    run_experiment(cfg, out.stream());
    return kPass;
  }
  const TailReport rep = tail_experiment(cfg);
  Output out(cfg.output);
  write_tail_csv(rep, out.stream());
  const double threshold = rep.beta - 0.05;
  const bool ok = rep.exponent >= threshold;
  std::cerr << (ok ? "PASS" : "FAIL") << " tail Z^" << rep.dimension << " r=" << rep.radius << ": exponent "
            << rep.exponent << " (sup-norm " << rep.exponent_sup << ") vs beta - 0.05 = " << threshold
            << ", contamination " << rep.contamination_fraction << " (" << rep.contaminated << " of " << rep.total
            << ")\n";
  if (rep.contamination_warning)
    std::cerr << "warning: contamination above 20%: the box is too small for the fit window\n";
  return ok ? kPass : kFail;
}

int run_explore(const ExperimentArgs& a) {
  ExperimentConfig cfg = config_from(a, "martingale-mc");
  if (cfg.experiment != "martingale-mc") throw UsageError("explore needs experiment \"martingale-mc\"");
  const MartingaleMcReport rep = martingale_mc(cfg);
  Output out(cfg.output);
  write_exploration_csv(rep, out.stream());
  std::cerr << rep.traces << " traces, " << rep.steps << " steps, mean increment " << rep.mean_increment
            << " (z " << rep.z << "), max exact gap " << rep.max_exact_gap << '\n';
  return kPass;
}

struct VerifyArgs {
  std::string suite, out;
  std::uint64_t seed = 1;
  int workers = 0;
};

int run_verify(const VerifyArgs& a) {
  std::vector<std::string> suites;
  if (a.suite == "all") suites = verify_suite_names();
  else suites.push_back(a.suite);
  VerifyOptions opt;
  opt.seed = a.seed;
  opt.workers = a.workers;
  bool all = true;
  Output out(a.out);
  for (const auto& s : suites) {
    const VerifyReport rep = verify_suite(s, opt);
    print_verify_report(rep, std::cout);
    if (!a.out.empty()) write_verify_csv(rep, out.stream());
    all = all && rep.passed;
  }
  return all ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wsf-lab: spanning forest sampling, electrical quantities and isoperimetric bounds"};
  app.require_subcommand(1);

  SampleArgs sample;
  auto* sc = app.add_subcommand("sample", "Sample spanning trees / forests and write them as CSV");
  sc->add_option("--graph", sample.graph, "Edge-list file");
  sc->add_option("--lattice", sample.lattice, "d,r,MODE with MODE free|wired|wired-root-origin");
  sc->add_option("--root", sample.root, "Root vertex (origin of the lattice by default)");
  sc->add_option("--samples", sample.samples, "Number of samples")->check(CLI::PositiveNumber);
  sc->add_option("--seed", sample.seed, "Seed");
  sc->add_option("--workers", sample.workers, "Worker threads (default WSF_LAB_WORKERS)");
  sc->add_option("--out", sample.out, "CSV output (stdout by default)");

  ResistanceArgs res;
  auto* rc = app.add_subcommand("resistance", "Effective resistance and conductance between vertex sets");
  rc->add_option("--graph", res.graph, "Edge-list file")->required();
  rc->add_option("--source-set", res.sources, "Comma-separated vertices")->required();
  rc->add_option("--target-set", res.targets, "Comma-separated vertices");
  rc->add_flag("--wired", res.wired, "Use the wired vertex as the target");
  rc->add_option("--tol", res.tol, "Relative residual tolerance")->check(CLI::PositiveNumber);
  rc->add_option("--out", res.out, "CSV output");

  ProfileArgs prof;
  auto* pc = app.add_subcommand("profile", "Isoperimetric profile kappa(G, A, t) on a small network");
  pc->add_option("--graph", prof.graph, "Edge-list file")->required();
  pc->add_option("--set", prof.set, "Comma-separated vertices of A (empty: no constraint)");
  pc->add_option("--variant", prof.variant, "edge|infinite");
  pc->add_option("--pi", prof.convention, "oriented-tail|incident-edges");
  pc->add_option("--t-grid", prof.grid, "Comma-separated t values")->required();
  pc->add_option("--out", prof.out, "CSV output");

  BoundArgs bound;
  auto* bc = app.add_subcommand("bound", "Resistance bound sum_k 2 / kappa(s_k)");
  bc->add_option("--preset", bound.preset, "zd:D[:C] | t23[:C] | power:C:G | const:C");
  bc->add_option("--table", bound.table, "File of 'threshold value' rows");
  bc->add_option("--s0", bound.s0, "Starting value s_0")->check(CLI::PositiveNumber);
  bc->add_option("--tol", bound.tol, "Tail tolerance");
  bc->add_option("--pi-a", bound.pi_a, "Also print the integral bound from pi(A) (power profiles)");
  bc->add_option("--out", bound.out, "CSV output");

  ExperimentArgs explore;
  auto* ec = app.add_subcommand("explore", "Exploration process and martingale M_n on a wired box");
  ec->add_option("--config", explore.config, "JSON config (experiment \"martingale-mc\")");
  ec->add_option("--lattice", explore.lattice, "d,r");
  ec->add_option("--rule", explore.rule, "ball-min|max-current");
  ec->add_option("--traces", explore.samples, "Number of traces")->check(CLI::PositiveNumber);
  ec->add_option("--seed", explore.seed, "Seed");
  ec->add_option("--workers", explore.workers, "Worker threads");
  ec->add_option("--out", explore.out, "CSV output");

  ExperimentArgs tail;
  auto* tc = app.add_subcommand("tail", "Tail of diam(Q) for the past of the origin; or any --config experiment");
  tc->add_option("--config", tail.config, "JSON config");
  tc->add_option("--lattice", tail.lattice, "d,r");
  tc->add_option("--samples", tail.samples, "Number of samples")->check(CLI::PositiveNumber);
  tc->add_option("--seed", tail.seed, "Seed");
  tc->add_option("--fit-window", tail.window, "lo,hi (default 2,r/3)");
  tc->add_option("--workers", tail.workers, "Worker threads");
  tc->add_flag("--serial", tail.serial, "Serial reference loop");
  tc->add_option("--out", tail.out, "CSV output");

  VerifyArgs ver;
  auto* vc = app.add_subcommand("verify", "Exact-check suites; exit 0 iff all pass");
  std::vector<std::string> names = verify_suite_names();
  names.push_back("all");
  vc->add_option("suite", ver.suite, "Suite name")->required()->check(CLI::IsMember(names));
  vc->add_option("--seed", ver.seed, "Seed for randomized instances");
  vc->add_option("--workers", ver.workers, "Worker threads");
  vc->add_option("--out", ver.out, "CSV table output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*sc) return run_sample(sample);
    if (*rc) return run_resistance(res);
    if (*pc) return run_profile(prof);
    if (*bc) return run_bound(bound);
    if (*ec) return run_explore(explore);
    if (*tc) return run_tail(tail);
    if (*vc) return run_verify(ver);
  } catch (const std::exception& e) {
    std::cerr << "wsf-lab: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
