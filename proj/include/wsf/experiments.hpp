#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wsf/exploration.hpp"
#include "wsf/lattice.hpp"
#include "wsf/network.hpp"
#include "wsf/parallel.hpp"

namespace wsf {

/// Experiment settings, loaded from JSON:
///
///   {
///     "experiment": "tail" | "one-end" | "kirchhoff" | "martingale-mc",
///     "lattice": {"dimension": 3, "radius": 32, "boundary": "wired"},
///     "samples": 10000,
///     "seed": 1,
///     "radii": [8, 16, 32],
///     "fit_window": [2, 12],
///     "rule": "ball-min",
///     "workers": 4,
///     "output": "tail.csv"
///   }
///
/// Every key but "experiment" is optional. A missing fit window defaults
/// to [2, r/3]; workers 0 means WSF_LAB_WORKERS or the OpenMP default.
struct ExperimentConfig {
  std::string experiment = "tail";
  LatticeBoxSpec lattice{3, 32, BoundaryMode::wired};
  std::int64_t samples = 1000;
  std::uint64_t seed = 1;
  std::vector<int> radii;
  double fit_lo = 2.0;
  double fit_hi = 0.0;
  EdgeRule rule = EdgeRule::ball_min;
  int workers = 0;
  Execution execution = Execution::parallel;
  std::string output;

  /// Throws std::invalid_argument on a broken invariant.
  void validate() const;
  int resolved_workers() const { return workers > 0 ? workers : default_worker_count(); }
};

ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

inline double beta(int dimension) { return 0.5 - 1.0 / dimension; }

// ---------------------------------------------------------------------------

struct TailReport {
  int dimension = 0;
  int radius = 0;
  std::int64_t total = 0;
  std::int64_t kept = 0;
  std::int64_t contaminated = 0;   // Q reached the box boundary |z|_inf = r
  double contamination_fraction = 0.0;
  bool contamination_warning = false;  // fraction above 20%
  double beta = 0.0;
  double fit_lo = 0.0, fit_hi = 0.0;
  int fit_points = 0;
  double exponent = 0.0;           // minus the fitted slope, Euclidean diameter
  double exponent_sup = 0.0;       // same for the sup-norm diameter
  double mean_past_size = 0.0;
  double max_diameter = 0.0;
  double diagonal = 0.0;           // Euclidean diameter of the box
  std::vector<double> diameters;   // Euclidean, sorted, every sample
  std::vector<int> sup_diameters;  // sorted
  std::vector<double> grid;        // log-spaced t
  std::vector<double> survival;    // P[diam > t], contaminated samples included
  std::vector<double> survival_sup;
};

/// Past of the origin under the wired UST of the box, one sample per RNG
/// stream; the survival fit runs on a 13-point log grid over the window.
TailReport tail_experiment(const ExperimentConfig& cfg);
void write_tail_csv(const TailReport& report, std::ostream& out);

/// Least-squares slope of log y against log x over points with y > 0.
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y, int* used = nullptr);

// ---------------------------------------------------------------------------

struct OneEndRow {
  int radius = 0;
  std::int64_t samples = 0;
  std::int64_t reached = 0;        // F(o) meets |z|_inf >= r/2
  double fraction = 0.0;
  double standard_error = 0.0;
  double mean_component_size = 0.0;
};

struct OneEndReport {
  int dimension = 0;
  std::vector<OneEndRow> rows;
  bool strictly_decreasing = false;
};

/// P[component of o in WSF_o reaches B_{r/2}] over cfg.radii.
OneEndReport one_end_proxy(const ExperimentConfig& cfg);
void write_one_end_csv(const OneEndReport& report, std::ostream& out);

// ---------------------------------------------------------------------------

struct EdgeFrequency {
  EdgeId edge = kNoEdge;
  double expected = 0.0;   // c(e) ER(e-, e+)
  double observed = 0.0;
  double z = 0.0;
};

struct KirchhoffReport {
  std::string graph;
  std::int64_t samples = 0;
  std::vector<EdgeFrequency> edges;
  double max_abs_z = 0.0;
  double tree_tv = -1.0;   // total variation against the enumerated law; -1 if skipped
  int trees = 0;
};

/// Wilson samples rooted at vertex 0 against Kirchhoff's formula; the tree
/// law is also compared with enumeration when g has at most tv_edge_cap
/// edges.
KirchhoffReport kirchhoff_validation(const Network& g, std::int64_t samples, std::uint64_t seed,
                                     Execution mode = Execution::parallel, int workers = 1,
                                     const std::string& name = "graph", int tv_edge_cap = 12);
void write_kirchhoff_csv(const KirchhoffReport& report, std::ostream& out);

// ---------------------------------------------------------------------------

struct MartingaleMcReport {
  int dimension = 0;
  int radius = 0;
  EdgeRule rule = EdgeRule::ball_min;
  std::int64_t traces = 0;
  std::int64_t steps = 0;
  double mean_increment = 0.0;
  double sd_increment = 0.0;
  double standard_error = 0.0;
  double z = 0.0;
  double mean_terminal_change = 0.0;   // M_T - M_0 per trace
  double terminal_standard_error = 0.0;
  double max_exact_gap = 0.0;          // max |E[M_{n+1} | F_n] - M_n|
  std::int64_t event_a = 0;
  std::int64_t exhausted = 0;
  std::vector<ExplorationTrace> runs;
};

MartingaleMcReport martingale_mc(const ExperimentConfig& cfg);
void write_exploration_csv(const MartingaleMcReport& report, std::ostream& out);

/// Runs the experiment named in cfg and writes its CSV.
void run_experiment(const ExperimentConfig& cfg, std::ostream& out);

}  // namespace wsf
