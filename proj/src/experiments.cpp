#include "wsf/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "wsf/csv.hpp"
#include "wsf/electrical.hpp"
#include "wsf/past.hpp"
#include "wsf/sampling.hpp"
#include "wsf/wilson.hpp"

namespace wsf {

int default_worker_count() {
  if (const char* env = std::getenv("WSF_LAB_WORKERS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n >= 1 && n <= 4096) return static_cast<int>(n);
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void ExperimentConfig::validate() const {
  static const char* kNames[] = {"tail", "one-end", "kirchhoff", "martingale-mc"};
  if (std::find_if(std::begin(kNames), std::end(kNames), [&](const char* n) { return experiment == n; }) ==
      std::end(kNames))
    throw std::invalid_argument("unknown experiment '" + experiment + "'");
  if (samples < 1) throw std::invalid_argument("samples must be at least 1");
  if (lattice.dimension < 1) throw std::invalid_argument("lattice dimension must be at least 1");
  if (lattice.radius < 1) throw std::invalid_argument("lattice radius must be at least 1");
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (radii[i] <= radii[i - 1]) throw std::invalid_argument("radii must be strictly increasing");
  for (int r : radii)
    if (r < 2) throw std::invalid_argument("radii must be at least 2");
  if (fit_lo <= 0.0 || (fit_hi != 0.0 && fit_hi <= fit_lo))
    throw std::invalid_argument("fit window must satisfy 0 < lo < hi");
  if (workers < 0) throw std::invalid_argument("workers must be nonnegative");
  if (experiment == "tail") {
    if (lattice.dimension < 3) throw std::invalid_argument("tail experiment needs dimension >= 3");
    if (2 * lattice.radius < 16) throw std::invalid_argument("tail experiment needs box side >= 16");
  }
  if (experiment == "one-end" && radii.empty()) throw std::invalid_argument("one-end needs radii");
}

ExperimentConfig parse_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  static const char* kKeys[] = {"experiment", "lattice", "samples", "seed",    "radii",
                                "fit_window", "rule",    "workers", "output", "execution"};
  for (const auto& [key, _] : j.items())
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys))
      throw std::invalid_argument("unknown config key '" + key + "'");

  ExperimentConfig cfg;
  try {
    if (!j.contains("experiment")) throw std::invalid_argument("config needs \"experiment\"");
    cfg.experiment = j.at("experiment").get<std::string>();
    if (j.contains("lattice")) {
      const auto& l = j.at("lattice");
      cfg.lattice.dimension = l.value("dimension", cfg.lattice.dimension);
      cfg.lattice.radius = l.value("radius", cfg.lattice.radius);
      if (l.contains("boundary")) cfg.lattice.mode = parse_boundary_mode(l.at("boundary").get<std::string>());
    }
    cfg.samples = j.value("samples", cfg.samples);
    cfg.seed = j.value("seed", cfg.seed);
    if (j.contains("radii")) cfg.radii = j.at("radii").get<std::vector<int>>();
    if (j.contains("fit_window")) {
      const auto w = j.at("fit_window").get<std::vector<double>>();
      if (w.size() != 2) throw std::invalid_argument("fit_window must be [lo, hi]");
      cfg.fit_lo = w[0];
      cfg.fit_hi = w[1];
    }
    if (j.contains("rule")) cfg.rule = parse_edge_rule(j.at("rule").get<std::string>());
    cfg.workers = j.value("workers", cfg.workers);
    cfg.output = j.value("output", cfg.output);
    if (j.contains("execution")) {
      const auto e = j.at("execution").get<std::string>();
      if (e == "serial") cfg.execution = Execution::serial;
      else if (e == "parallel") cfg.execution = Execution::parallel;
      else throw std::invalid_argument("execution must be serial or parallel");
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad config value: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y, int* used) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) continue;
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (used) *used = n;
  if (n < 2) return std::nan("");
  const double den = n * sxx - sx * sx;
  if (den <= 0.0) return std::nan("");
  return (n * sxy - sx * sy) / den;
}

// ---------------------------------------------------------------------------

namespace {

struct TailDraw {
  double euclidean = 0.0;
  int sup = 0;
  int size = 0;
  bool contaminated = false;
};

struct TailWorker {
  WilsonSampler wilson;
  PastFinder past;
  std::vector<EdgeId> parents;
};

std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i) g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1));
  return g;
}

template <class T>
double survival_at(const std::vector<T>& sorted, double t) {
  const auto above = sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), t);
  return static_cast<double>(above) / static_cast<double>(sorted.size());
}

}  // namespace

TailReport tail_experiment(const ExperimentConfig& cfg) {
  ExperimentConfig c = cfg;
  c.experiment = "tail";
  c.validate();
  const int d = c.lattice.dimension, r = c.lattice.radius;
  const Network box = build_lattice_box({d, r, BoundaryMode::wired, c.lattice.vertex_limit});
  const VertexId origin = lattice_origin(d, r);
  const VertexId root = *box.wired_vertex();

  const auto draws = run_samples<TailDraw>(
      c.samples, c.execution, c.resolved_workers(),
      [&] { return TailWorker{WilsonSampler(box), PastFinder(box), {}}; },
      [&](TailWorker& w, std::int64_t i) {
        RngStream rng(c.seed, static_cast<std::uint64_t>(i));
        w.wilson.sample(root, rng, w.parents);
        const PastSummary q = w.past.past_of(w.parents, origin);
        return TailDraw{q.euclidean_diameter, q.sup_diameter, static_cast<int>(q.vertices.size()),
                        q.reached_boundary};
      });

  TailReport rep;
  rep.dimension = d;
  rep.radius = r;
  rep.total = c.samples;
  rep.beta = beta(d);
  rep.fit_lo = c.fit_lo;
  rep.fit_hi = c.fit_hi > 0.0 ? c.fit_hi : r / 3.0;
  if (rep.fit_hi <= rep.fit_lo) throw std::invalid_argument("default fit window [2, r/3] is empty; set fit_window");
  double size_sum = 0.0;
  for (const TailDraw& t : draws) {
    rep.diameters.push_back(t.euclidean);
    rep.sup_diameters.push_back(t.sup);
    size_sum += t.size;
    if (t.contaminated) ++rep.contaminated;
  }
  rep.kept = rep.total - rep.contaminated;
  rep.contamination_fraction = static_cast<double>(rep.contaminated) / rep.total;
  rep.contamination_warning = rep.contamination_fraction > 0.2;
  rep.mean_past_size = size_sum / rep.total;
  std::sort(rep.diameters.begin(), rep.diameters.end());
  std::sort(rep.sup_diameters.begin(), rep.sup_diameters.end());
  rep.max_diameter = rep.diameters.back();
  rep.diagonal = 2.0 * r * std::sqrt(static_cast<double>(d));

  rep.grid = log_grid(rep.fit_lo, rep.fit_hi, 13);
  for (double t : rep.grid) {
    rep.survival.push_back(survival_at(rep.diameters, t));
    rep.survival_sup.push_back(survival_at(rep.sup_diameters, t));
  }
  rep.exponent = 0.0 - log_log_slope(rep.grid, rep.survival, &rep.fit_points);
  rep.exponent_sup = 0.0 - log_log_slope(rep.grid, rep.survival_sup);
  return rep;
}

void write_tail_csv(const TailReport& rep, std::ostream& out) {
  CsvWriter w(out);
  w.metadata("experiment", "tail");
  w.metadata("dimension", rep.dimension);
  w.metadata("radius", rep.radius);
  w.metadata("beta", rep.beta);
  w.metadata("samples", static_cast<double>(rep.total));
  w.metadata("kept", static_cast<double>(rep.kept));
  w.metadata("contaminated", static_cast<double>(rep.contaminated));
  w.metadata("contamination_fraction", rep.contamination_fraction);
  w.metadata("fit_lo", rep.fit_lo);
  w.metadata("fit_hi", rep.fit_hi);
  w.metadata("exponent", rep.exponent);
  w.metadata("exponent_sup", rep.exponent_sup);
  w.metadata("mean_past_size", rep.mean_past_size);
  w.header({"t", "survival", "survival_sup"});
  for (std::size_t i = 0; i < rep.grid.size(); ++i)
    w.row({CsvWriter::number(rep.grid[i]), CsvWriter::number(rep.survival[i]),
           CsvWriter::number(rep.survival_sup[i])});
}

// ---------------------------------------------------------------------------

OneEndReport one_end_proxy(const ExperimentConfig& cfg) {
  ExperimentConfig c = cfg;
  c.experiment = "one-end";
  c.validate();
  OneEndReport rep;
  rep.dimension = c.lattice.dimension;
  const std::vector<int> o(c.lattice.dimension, 0);
  for (int r : c.radii) {
    struct Draw {
      bool reached = false;
      int size = 0;
    };
    const auto draws = run_samples<Draw>(
        c.samples, c.execution, c.resolved_workers(),
        [&] { return RootWiredSampler(c.lattice.dimension, r, o); },
        [&](RootWiredSampler& s, std::int64_t i) {
          RngStream rng(c.seed, (static_cast<std::uint64_t>(r) << 40) | static_cast<std::uint64_t>(i));
          const RootWiredSample x = s.sample(rng);
          return Draw{2 * x.max_sup_norm >= r, static_cast<int>(x.origin_component.size())};
        });
    OneEndRow row;
    row.radius = r;
    row.samples = c.samples;
    double size_sum = 0.0;
    for (const Draw& x : draws) {
      row.reached += x.reached;
      size_sum += x.size;
    }
    row.fraction = static_cast<double>(row.reached) / row.samples;
    row.standard_error = std::sqrt(row.fraction * (1.0 - row.fraction) / row.samples);
    row.mean_component_size = size_sum / row.samples;
    rep.rows.push_back(row);
  }
  rep.strictly_decreasing = true;
  for (std::size_t i = 1; i < rep.rows.size(); ++i)
    if (!(rep.rows[i].fraction < rep.rows[i - 1].fraction)) rep.strictly_decreasing = false;
  return rep;
}

void write_one_end_csv(const OneEndReport& rep, std::ostream& out) {
  CsvWriter w(out);
  w.metadata("experiment", "one-end");
  w.metadata("dimension", rep.dimension);
  w.metadata("strictly_decreasing", rep.strictly_decreasing ? "true" : "false");
  w.header({"radius", "samples", "reached", "fraction", "standard_error", "mean_component_size"});
  for (const OneEndRow& r : rep.rows)
    w.row({CsvWriter::number(r.radius), CsvWriter::number(static_cast<long long>(r.samples)),
           CsvWriter::number(static_cast<long long>(r.reached)), CsvWriter::number(r.fraction),
           CsvWriter::number(r.standard_error), CsvWriter::number(r.mean_component_size)});
}

// ---------------------------------------------------------------------------

KirchhoffReport kirchhoff_validation(const Network& g, std::int64_t samples, std::uint64_t seed, Execution mode,
                                     int workers, const std::string& name, int tv_edge_cap) {
  if (samples < 1) throw std::invalid_argument("samples must be at least 1");
  if (g.edge_count() > 64) throw std::invalid_argument("kirchhoff validation supports at most 64 edges");
  struct Worker {
    WilsonSampler wilson;
    std::vector<EdgeId> parents;
  };
  const auto masks = run_samples<EdgeMask>(
      samples, mode, workers, [&] { return Worker{WilsonSampler(g), {}}; },
      [&](Worker& w, std::int64_t i) {
        RngStream rng(seed, static_cast<std::uint64_t>(i));
        w.wilson.sample(0, rng, w.parents);
        EdgeMask m = 0;
        for (EdgeId e : w.parents)
          if (e != kNoEdge) m |= EdgeMask{1} << e;
        return m;
      });

  KirchhoffReport rep;
  rep.graph = name;
  rep.samples = samples;
  const double n = static_cast<double>(samples);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::int64_t hits = 0;
    for (EdgeMask m : masks) hits += (m >> e) & 1u;
    EdgeFrequency f;
    f.edge = e;
    f.expected = kirchhoff_edge_probability(g, e);
    f.observed = hits / n;
    const double var = f.expected * (1.0 - f.expected);
    if (var > 1e-12) {
      f.z = (f.observed - f.expected) / std::sqrt(var / n);
    } else {
      f.z = std::abs(f.observed - f.expected) < 0.5 / n ? 0.0 : INFINITY;
    }
    rep.max_abs_z = std::max(rep.max_abs_z, std::abs(f.z));
    rep.edges.push_back(f);
  }
  if (g.edge_count() <= tv_edge_cap) {
    const SpanningDistribution law = enumerate_spanning_trees(g, tv_edge_cap);
    std::map<EdgeMask, std::int64_t> counts;
    for (EdgeMask m : masks) ++counts[m];
    double tv = 0.0;
    for (std::size_t i = 0; i < law.trees.size(); ++i) {
      const auto it = counts.find(law.trees[i].edges);
      const double obs = it == counts.end() ? 0.0 : it->second / n;
      tv += std::abs(obs - law.probability(i));
      if (it != counts.end()) counts.erase(it);
    }
    for (const auto& [m, k] : counts) tv += k / n;  // non-trees: never expected
    rep.tree_tv = tv / 2.0;
    rep.trees = static_cast<int>(law.trees.size());
  }
  return rep;
}

void write_kirchhoff_csv(const KirchhoffReport& rep, std::ostream& out) {
  CsvWriter w(out);
  w.metadata("experiment", "kirchhoff");
  w.metadata("graph", rep.graph);
  w.metadata("samples", static_cast<double>(rep.samples));
  w.metadata("max_abs_z", rep.max_abs_z);
  w.metadata("tree_tv", rep.tree_tv);
  w.header({"edge", "expected", "observed", "z"});
  for (const EdgeFrequency& f : rep.edges)
    w.row({CsvWriter::number(f.edge), CsvWriter::number(f.expected), CsvWriter::number(f.observed),
           CsvWriter::number(f.z)});
}

// ---------------------------------------------------------------------------

MartingaleMcReport martingale_mc(const ExperimentConfig& cfg) {
  ExperimentConfig c = cfg;
  c.experiment = "martingale-mc";
  c.validate();
  const int d = c.lattice.dimension, r = c.lattice.radius;
  const Network box = build_lattice_box({d, r, BoundaryMode::wired, c.lattice.vertex_limit});
  const VertexId o = lattice_origin(d, r);
  ExplorationOptions opt;
  opt.rule = c.rule;

  struct NoWorker {};
  MartingaleMcReport rep;
  rep.dimension = d;
  rep.radius = r;
  rep.rule = c.rule;
  rep.traces = c.samples;
  rep.runs = run_samples<ExplorationTrace>(
      c.samples, c.execution, c.resolved_workers(), [] { return NoWorker{}; },
      [&](NoWorker&, std::int64_t i) {
        RngStream rng(c.seed, static_cast<std::uint64_t>(i));
        return exploration_process(box, o, rng, opt);
      });

  double sum = 0.0, sum_sq = 0.0, term = 0.0, term_sq = 0.0;
  for (const ExplorationTrace& t : rep.runs) {
    for (const ExplorationStep& s : t.steps) {
      const double inc = s.m_after - s.m_before;
      sum += inc;
      sum_sq += inc * inc;
      rep.max_exact_gap = std::max(rep.max_exact_gap, std::abs(s.m_expected - s.m_before));
      ++rep.steps;
    }
    const double change = (t.steps.empty() ? t.m0 : t.steps.back().m_after) - t.m0;
    term += change;
    term_sq += change * change;
    rep.event_a += t.event_a;
    rep.exhausted += t.exhausted;
  }
  if (rep.steps > 0) {
    const double n = static_cast<double>(rep.steps);
    rep.mean_increment = sum / n;
    rep.sd_increment = std::sqrt(std::max(0.0, sum_sq / n - rep.mean_increment * rep.mean_increment));
    rep.standard_error = rep.sd_increment / std::sqrt(n);
    rep.z = rep.standard_error > 0.0 ? rep.mean_increment / rep.standard_error : 0.0;
  }
  const double k = static_cast<double>(rep.traces);
  rep.mean_terminal_change = term / k;
  const double var = std::max(0.0, term_sq / k - rep.mean_terminal_change * rep.mean_terminal_change);
  rep.terminal_standard_error = k > 1 ? std::sqrt(var * k / (k - 1) / k) : 0.0;
  return rep;
}

void write_exploration_csv(const MartingaleMcReport& rep, std::ostream& out) {
  CsvWriter w(out);
  w.metadata("experiment", "explore");
  w.metadata("dimension", rep.dimension);
  w.metadata("radius", rep.radius);
  w.metadata("rule", to_string(rep.rule));
  w.metadata("traces", static_cast<double>(rep.traces));
  w.metadata("mean_increment", rep.mean_increment);
  w.metadata("standard_error", rep.standard_error);
  w.metadata("z", rep.z);
  w.metadata("max_exact_gap", rep.max_exact_gap);
  w.header({"trace", "n", "edge", "in_forest", "probability", "M_n", "M_next", "expected_M_next", "S_size",
            "at_n_r", "by_current", "event_a", "exhausted", "truncated"});
  for (std::size_t i = 0; i < rep.runs.size(); ++i) {
    const ExplorationTrace& t = rep.runs[i];
    for (std::size_t k = 0; k < t.steps.size(); ++k) {
      const ExplorationStep& s = t.steps[k];
      const bool last = k + 1 == t.steps.size();
      w.row({CsvWriter::number(static_cast<long long>(i)), CsvWriter::number(s.n), CsvWriter::number(s.edge),
             s.in_forest ? "1" : "0", CsvWriter::number(s.probability), CsvWriter::number(s.m_before),
             CsvWriter::number(s.m_after), CsvWriter::number(s.m_expected), CsvWriter::number(s.s_size),
             s.at_n_r ? "1" : "0", s.by_current ? "1" : "0", last && t.event_a ? "1" : "0",
             last && t.exhausted ? "1" : "0", last && t.truncated ? "1" : "0"});
    }
  }
}

void run_experiment(const ExperimentConfig& cfg, std::ostream& out) {
  cfg.validate();
  if (cfg.experiment == "tail") {
    write_tail_csv(tail_experiment(cfg), out);
  } else if (cfg.experiment == "one-end") {
    write_one_end_csv(one_end_proxy(cfg), out);
  } else if (cfg.experiment == "martingale-mc") {
    write_exploration_csv(martingale_mc(cfg), out);
  } else {
    const Network box = build_lattice_box(cfg.lattice);
    std::ostringstream name;
    name << "Z" << cfg.lattice.dimension << " r=" << cfg.lattice.radius << ' ' << to_string(cfg.lattice.mode);
    write_kirchhoff_csv(kirchhoff_validation(box, cfg.samples, cfg.seed, cfg.execution, cfg.resolved_workers(),
                                             name.str()),
                        out);
  }
}

}  // namespace wsf
