#ifndef EPIGAME_EXPERIMENTS_HPP
#define EPIGAME_EXPERIMENTS_HPP

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "epigame/dynamics.hpp"
#include "epigame/equilibrium.hpp"
#include "epigame/model.hpp"

namespace epigame {

enum class RunMode { Coupled, Switched, EquilibriumOnly };

/// A named, fully specified run: parameters, degree distribution, initial
/// social state, integration mode and discretization. Identical scenarios
/// produce byte-identical artifacts.
struct Scenario {
  std::string name = "scenario";
  ModelParams params;
  DegreeDistribution dist;
  SocialState initial;
  RunMode mode = RunMode::Coupled;
  double horizon = 5000.0;
  double step = 0.01;
  int record_stride = 1;
};

struct ScenarioSummary {
  std::string name;
  std::string mode;
  double final_theta = 0.0;
  double final_y_avg = 0.0;
  bool converged = false;
  double convergence_time = 0.0;
  double max_clamp = 0.0;
  double theta_gap = 0.0;       // |final_theta - equilibrium theta_star|
  double max_y_gap = 0.0;       // max_d |y_sim - y_star|
  EquilibriumResult equilibrium;
};

struct ScenarioArtifacts {
  Trajectory trajectory;  // empty in equilibrium-only mode
  ScenarioSummary summary;
};

/// Runs the scenario in its requested mode and compares the simulated
/// limit against the analytic equilibrium. Throws std::invalid_argument on
/// validation failure, std::runtime_error on integrator divergence
/// (message carries the scenario name).
ScenarioArtifacts run_scenario(const Scenario& sc);

/// Writes <name>_trajectory.csv (unless equilibrium-only),
/// <name>_equilibrium.json and <name>_summary.json under out_dir.
void write_scenario_artifacts(const std::filesystem::path& out_dir, const Scenario& sc,
                              const ScenarioArtifacts& artifacts);

enum class SweepParameter { Alpha, BetaP, CP, M4 };
std::string to_string(SweepParameter p);

/// One equilibrium computation per grid value of the swept parameter.
/// For M4 sweeps the base distribution must have d_max = 4; masses become
/// (1 - 0.05 - 0.05 - v, 0.05, 0.05, v) and grid values that drive m_1
/// negative yield rows flagged invalid rather than a failure.
struct SweepSpec {
  Scenario base;
  SweepParameter parameter = SweepParameter::CP;
  std::vector<double> grid;  // strictly increasing
  std::string out_path;
};

struct SweepRow {
  double value = 0.0;
  double y_avg = 0.0;
  double theta_star = 0.0;
  std::string regime;
  bool valid = true;
};

/// Evaluates the analytic equilibrium at every grid point. Points run in
/// parallel; rows come back ordered by grid index.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// CSV with header value,y_avg,theta_star,regime (invalid rows carry nan
/// values and regime "invalid").
void write_sweep_csv(const std::string& path, std::span<const SweepRow> rows);

struct DistributionSweep {
  std::string label;  // "uniform", "binomial", "bimodal"
  DegreeDistribution dist;
  std::vector<SweepRow> rows;
};

/// Runs the same parameter sweep over the three reference degree
/// distributions on 1..d_max (uniform, binomial(n, p) renormalized,
/// bimodal), holding the base parameters fixed. beta_P / beta_U entries in
/// base may be a single value to broadcast across degrees.
std::vector<DistributionSweep> compare_distributions(SweepParameter parameter,
                                                     std::span<const double> grid,
                                                     const ModelParams& base, int d_max,
                                                     int binomial_n = 20,
                                                     double binomial_p = 0.525);

/// Evenly spaced grid including both endpoints.
std::vector<double> linspace(double lo, double hi, int points);

}  // namespace epigame

#endif  // EPIGAME_EXPERIMENTS_HPP
