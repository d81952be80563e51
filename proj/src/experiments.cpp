#include "epigame/experiments.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "csv_detail.hpp"
#include "epigame/config.hpp"
#include "epigame/csv.hpp"
#include "epigame/reduced.hpp"
#include "parallel_detail.hpp"

namespace epigame {

namespace {

std::string mode_name(RunMode mode) {
  switch (mode) {
    case RunMode::Coupled: return "coupled";
    case RunMode::Switched: return "switched";
    case RunMode::EquilibriumOnly: return "equilibrium-only";
  }
  return "unknown";
}

// Applies one grid value of the swept parameter; reports false when the
// point produces an invalid distribution.
bool apply_sweep_value(SweepParameter parameter, double value, ModelParams& params,
                       DegreeDistribution& dist) {
  switch (parameter) {
    case SweepParameter::Alpha:
      params.alpha = value;
      return true;
    case SweepParameter::BetaP:
      params.beta_P.assign(dist.size(), value);
      return true;
    case SweepParameter::CP:
      params.c_P = value;
      return true;
    case SweepParameter::M4: {
      if (dist.d_max() != 4)
        throw std::invalid_argument("m_4 sweep requires a degree set 1..4");
      const double m1 = 1.0 - 0.05 - 0.05 - value;
      if (m1 < 0.0 || value <= 0.0) return false;
      dist = DegreeDistribution::custom({m1, 0.05, 0.05, value});
      return true;
    }
  }
  return false;
}

SweepRow equilibrium_row(double value, const ModelParams& params,
                         const DegreeDistribution& dist) {
  SweepRow row;
  row.value = value;
  const auto eq = find_equilibrium(params, dist);
  row.theta_star = eq.theta_star;
  row.y_avg = average_infection(eq.y_star, dist);
  row.regime = to_string(eq.regime);
  return row;
}

}  // namespace

std::string to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::Alpha: return "alpha";
    case SweepParameter::BetaP: return "beta_P";
    case SweepParameter::CP: return "c_P";
    case SweepParameter::M4: return "m_4";
  }
  return "unknown";
}

ScenarioArtifacts run_scenario(const Scenario& sc) {
  const auto report = validate(sc.params, sc.dist);
  if (!report.ok()) {
    std::string msg = "scenario '" + sc.name + "' failed validation:";
    for (const auto& v : report.violations) msg += " " + v + ";";
    throw std::invalid_argument(msg);
  }

  ScenarioArtifacts art;
  art.summary.name = sc.name;
  art.summary.mode = mode_name(sc.mode);
  art.summary.equilibrium = find_equilibrium(sc.params, sc.dist);

  IntegrateOptions opts;
  opts.step = sc.step;
  opts.horizon = sc.horizon;
  opts.record_stride = sc.record_stride;

  try {
    if (sc.mode == RunMode::Coupled)
      art.trajectory = integrate_coupled(sc.initial, sc.params, sc.dist, opts);
    else if (sc.mode == RunMode::Switched)
      art.trajectory = integrate_switched(sc.initial.y, sc.params, sc.dist, opts);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error("scenario '" + sc.name + "': " + e.what());
  }

  const auto& eq = art.summary.equilibrium;
  if (sc.mode == RunMode::EquilibriumOnly) {
    art.summary.final_theta = eq.theta_star;
    art.summary.final_y_avg = average_infection(eq.y_star, sc.dist);
  } else {
    art.summary.final_theta = art.trajectory.theta_series.back();
    art.summary.final_y_avg = art.trajectory.y_avg_series.back();
    art.summary.converged = art.trajectory.converged;
    art.summary.convergence_time = art.trajectory.convergence_time;
    art.summary.max_clamp = art.trajectory.max_clamp;
    art.summary.theta_gap = std::abs(art.summary.final_theta - eq.theta_star);
    const auto& y_final = art.trajectory.states.back().y;
    for (std::size_t i = 0; i < y_final.size(); ++i)
      art.summary.max_y_gap =
          std::max(art.summary.max_y_gap, std::abs(y_final[i] - eq.y_star[i]));
  }
  return art;
}

void write_scenario_artifacts(const std::filesystem::path& out_dir, const Scenario& sc,
                              const ScenarioArtifacts& art) {
  std::filesystem::create_directories(out_dir);
  if (sc.mode != RunMode::EquilibriumOnly)
    write_trajectory_csv((out_dir / (sc.name + "_trajectory.csv")).string(), art.trajectory,
                         sc.dist);

  {
    std::ofstream out(out_dir / (sc.name + "_equilibrium.json"));
    out << equilibrium_to_json(art.summary.equilibrium).dump(2) << '\n';
  }
  {
    nlohmann::json j;
    j["name"] = art.summary.name;
    j["mode"] = art.summary.mode;
    j["theta_th"] = thresholds(sc.params, sc.dist).theta_th;
    j["final_theta"] = art.summary.final_theta;
    j["final_y_avg"] = art.summary.final_y_avg;
    j["converged"] = art.summary.converged;
    j["convergence_time"] = art.summary.convergence_time;
    j["max_clamp"] = art.summary.max_clamp;
    j["theta_gap"] = art.summary.theta_gap;
    j["max_y_gap"] = art.summary.max_y_gap;
    j["equilibrium_regime"] = to_string(art.summary.equilibrium.regime);
    j["theta_star"] = art.summary.equilibrium.theta_star;
    std::ofstream out(out_dir / (sc.name + "_summary.json"));
    out << j.dump(2) << '\n';
  }
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  for (std::size_t i = 1; i < spec.grid.size(); ++i)
    if (!(spec.grid[i] > spec.grid[i - 1]))
      throw std::invalid_argument("sweep grid must be strictly increasing");
  if (spec.grid.empty()) throw std::invalid_argument("sweep grid is empty");
  for (double v : spec.grid) {
    const bool legal = (spec.parameter == SweepParameter::Alpha && v > 0.0 && v < 1.0) ||
                       (spec.parameter == SweepParameter::BetaP && v > 0.0 && v < 1.0) ||
                       (spec.parameter == SweepParameter::CP && v > 0.0) ||
                       (spec.parameter == SweepParameter::M4 && v > 0.0 && v < 1.0);
    if (!legal)
      throw std::invalid_argument("sweep value " + std::to_string(v) + " is outside the legal "
                                  "range of " + to_string(spec.parameter));
  }

  std::vector<SweepRow> rows(spec.grid.size());
  detail::parallel_for(spec.grid.size(), [&](std::size_t i) {
    ModelParams params = spec.base.params;
    DegreeDistribution dist = spec.base.dist;
    const double value = spec.grid[i];
    if (!apply_sweep_value(spec.parameter, value, params, dist)) {
      rows[i].value = value;
      rows[i].valid = false;
      rows[i].regime = "invalid";
      rows[i].y_avg = std::numeric_limits<double>::quiet_NaN();
      rows[i].theta_star = std::numeric_limits<double>::quiet_NaN();
      return;
    }
    rows[i] = equilibrium_row(value, params, dist);
  });
  return rows;
}

void write_sweep_csv(const std::string& path, std::span<const SweepRow> rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "value,y_avg,theta_star,regime\n";
  for (const auto& row : rows)
    out << detail::format_value(row.value) << ',' << detail::format_value(row.y_avg) << ','
        << detail::format_value(row.theta_star) << ',' << row.regime << '\n';
}

std::vector<DistributionSweep> compare_distributions(SweepParameter parameter,
                                                     std::span<const double> grid,
                                                     const ModelParams& base, int d_max,
                                                     int binomial_n, double binomial_p) {
  if (parameter == SweepParameter::M4)
    throw std::invalid_argument("compare_distributions does not support the m_4 sweep");

  std::vector<DistributionSweep> out;
  out.push_back({"uniform", DegreeDistribution::uniform(d_max), {}});
  out.push_back({"binomial", DegreeDistribution::binomial(binomial_n, binomial_p, d_max), {}});
  out.push_back({"bimodal", DegreeDistribution::bimodal(d_max), {}});

  for (auto& entry : out) {
    SweepSpec spec;
    spec.parameter = parameter;
    spec.grid.assign(grid.begin(), grid.end());
    spec.base.params = base;
    const std::size_t n = entry.dist.size();
    if (spec.base.params.beta_P.size() == 1)
      spec.base.params.beta_P.assign(n, base.beta_P.front());
    if (spec.base.params.beta_U.size() == 1)
      spec.base.params.beta_U.assign(n, base.beta_U.front());
    spec.base.dist = entry.dist;
    entry.rows = run_sweep(spec);
  }
  return out;
}

std::vector<double> linspace(double lo, double hi, int points) {
  if (points < 2) throw std::invalid_argument("linspace needs at least two points");
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i)
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

}  // namespace epigame
