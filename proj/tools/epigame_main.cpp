// Command-line front end: scenario simulation, equilibrium classification,
// parameter sweeps, distribution comparisons and the degree-class network
// consistency check. Exit codes: 0 success, 1 configuration error,
// 2 numerical failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "epigame/config.hpp"
#include "epigame/csv.hpp"
#include "epigame/experiments.hpp"
#include "epigame/nimfa.hpp"
#include "epigame/reduced.hpp"

namespace {

namespace fs = std::filesystem;
using namespace epigame;

struct CommonFlags {
  std::string out_dir = ".";
  std::optional<double> step;
  std::optional<double> horizon;
  std::optional<double> epsilon;
  std::optional<int> grid_points;
  std::optional<int> stride;
};

void apply_overrides(Scenario& sc, const CommonFlags& flags) {
  if (flags.step) sc.step = *flags.step;
  if (flags.horizon) sc.horizon = *flags.horizon;
  if (flags.epsilon) sc.params.epsilon = *flags.epsilon;
  if (flags.stride) sc.record_stride = *flags.stride;
}

int cmd_simulate(const std::string& config_path, const CommonFlags& flags,
                 const std::string& mode_override) {
  Scenario sc = load_scenario(config_path);
  apply_overrides(sc, flags);
  if (mode_override == "coupled")
    sc.mode = RunMode::Coupled;
  else if (mode_override == "switched")
    sc.mode = RunMode::Switched;
  else if (mode_override == "equilibrium-only")
    sc.mode = RunMode::EquilibriumOnly;
  else if (!mode_override.empty())
    throw std::invalid_argument("config: unknown --mode '" + mode_override + "'");

  const auto art = run_scenario(sc);
  write_scenario_artifacts(flags.out_dir, sc, art);
  std::cout << sc.name << ": mode=" << art.summary.mode
            << " final_theta=" << art.summary.final_theta
            << " final_y_avg=" << art.summary.final_y_avg
            << " theta_star=" << art.summary.equilibrium.theta_star
            << " regime=" << to_string(art.summary.equilibrium.regime)
            << (art.summary.converged ? " (converged)" : "") << '\n';
  return 0;
}

int cmd_equilibrium(const std::string& config_path, const CommonFlags& flags, bool write_file) {
  Scenario sc = load_scenario(config_path);
  apply_overrides(sc, flags);
  const auto eq = find_equilibrium(sc.params, sc.dist);
  const auto j = equilibrium_to_json(eq);
  std::cout << j.dump(2) << '\n';
  if (write_file) {
    fs::create_directories(flags.out_dir);
    std::ofstream out(fs::path(flags.out_dir) / (sc.name + "_equilibrium.json"));
    out << j.dump(2) << '\n';
  }
  return 0;
}

int cmd_sweep(const std::string& config_path, const CommonFlags& flags) {
  SweepConfig cfg = load_sweep(config_path);
  if (flags.grid_points && cfg.spec.grid.size() >= 2)
    cfg.spec.grid = linspace(cfg.spec.grid.front(), cfg.spec.grid.back(), *flags.grid_points);
  if (flags.epsilon) cfg.spec.base.params.epsilon = *flags.epsilon;

  const auto rows = run_sweep(cfg.spec);
  fs::create_directories(flags.out_dir);
  const std::string out_name =
      cfg.spec.out_path.empty() ? "sweep_" + to_string(cfg.spec.parameter) + ".csv"
                                : cfg.spec.out_path;
  const auto path = (fs::path(flags.out_dir) / out_name).string();
  write_sweep_csv(path, rows);
  std::cout << "sweep over " << to_string(cfg.spec.parameter) << ": " << rows.size()
            << " rows -> " << path << '\n';
  return 0;
}

int cmd_compare(const std::string& config_path, const CommonFlags& flags) {
  CompareConfig cfg = load_compare(config_path);
  if (flags.grid_points && cfg.grid.size() >= 2)
    cfg.grid = linspace(cfg.grid.front(), cfg.grid.back(), *flags.grid_points);

  const auto sweeps = compare_distributions(cfg.parameter, cfg.grid, cfg.base, cfg.d_max,
                                            cfg.binomial_n, cfg.binomial_p);
  fs::create_directories(flags.out_dir);
  for (const auto& entry : sweeps) {
    const auto path = (fs::path(flags.out_dir) /
                       ("compare_" + to_string(cfg.parameter) + "_" + entry.label + ".csv"))
                          .string();
    write_sweep_csv(path, entry.rows);
    std::cout << entry.label << " (d_avg=" << entry.dist.d_avg << ") -> " << path << '\n';
  }
  return 0;
}

int cmd_nimfa_check(const std::string& config_path, const CommonFlags& flags, int d_star_flag) {
  Scenario sc = load_scenario(config_path);
  apply_overrides(sc, flags);
  const int d_star = d_star_flag > 0 ? d_star_flag : sc.dist.d_max() + 1;
  if (d_star < 1 || d_star > sc.dist.d_max() + 1)
    throw std::invalid_argument("config: --d-star must lie in 1..d_max+1");

  const auto abar = build_abar(d_star, sc.params, sc.dist);
  const double rho_power = spectral_radius(abar.graph);
  const double rho_rank_one = rank_one_radius(abar.factors);
  const double horizon = flags.horizon.value_or(50.0);
  const double step = flags.step.value_or(0.01);
  const double deviation =
      equivalence_check(d_star, sc.params, sc.dist, sc.initial.y, step, horizon);

  fs::create_directories(flags.out_dir);
  const fs::path base = fs::path(flags.out_dir) / (sc.name + "_abar");
  write_graph_csv((base.string() + "_edges.csv"), (base.string() + "_recovery.csv"), abar.graph);

  nlohmann::json j;
  j["d_star"] = d_star;
  j["rho_power_iteration"] = rho_power;
  j["rho_rank_one"] = rho_rank_one;
  j["rho_gap"] = std::abs(rho_power - rho_rank_one);
  j["trajectory_deviation"] = deviation;
  j["strongly_connected"] = abar.graph.strongly_connected();
  std::ofstream out(base.string() + "_summary.json");
  out << j.dump(2) << '\n';
  std::cout << "d_star=" << d_star << " rho=" << rho_power << " rank_one=" << rho_rank_one
            << " |gap|=" << std::abs(rho_power - rho_rank_one)
            << " trajectory_deviation=" << deviation << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Networked epidemic protection-game simulator and equilibrium solver"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string config_path;
  std::string mode_override;
  bool eq_write = false;
  int d_star_flag = 0;

  auto add_common = [&](CLI::App* cmd, bool with_grid) {
    cmd->add_option("config", config_path, "JSON configuration file")->required();
    cmd->add_option("--out", flags.out_dir, "output directory (default: .)");
    cmd->add_option("--step", flags.step, "integration step override");
    cmd->add_option("--horizon", flags.horizon, "time horizon override");
    cmd->add_option("--epsilon", flags.epsilon, "timescale separation override");
    if (with_grid) cmd->add_option("--grid-points", flags.grid_points, "grid resolution override");
  };

  auto* simulate = app.add_subcommand("simulate", "integrate a scenario and write artifacts");
  add_common(simulate, false);
  simulate->add_option("--mode", mode_override, "coupled | switched | equilibrium-only");
  simulate->add_option("--stride", flags.stride, "record every N-th step");

  auto* equilibrium = app.add_subcommand("equilibrium", "print the equilibrium classification");
  add_common(equilibrium, false);
  equilibrium->add_flag("--write", eq_write, "also write <name>_equilibrium.json under --out");

  auto* sweep = app.add_subcommand("sweep", "equilibrium sweep over one parameter");
  add_common(sweep, true);

  auto* compare = app.add_subcommand("compare-dist",
                                     "sweep across uniform/binomial/bimodal degree distributions");
  add_common(compare, true);

  auto* nimfa = app.add_subcommand("nimfa-check",
                                   "degree-class network spectral and trajectory consistency");
  add_common(nimfa, false);
  nimfa->add_option("--d-star", d_star_flag, "regime pivot (default d_max+1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // help/version exit clean, bad usage is a config error
  }

  try {
    if (simulate->parsed()) return cmd_simulate(config_path, flags, mode_override);
    if (equilibrium->parsed()) return cmd_equilibrium(config_path, flags, eq_write);
    if (sweep->parsed()) return cmd_sweep(config_path, flags);
    if (compare->parsed()) return cmd_compare(config_path, flags);
    if (nimfa->parsed()) return cmd_nimfa_check(config_path, flags, d_star_flag);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
