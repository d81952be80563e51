#ifndef EPIGAME_CONFIG_HPP
#define EPIGAME_CONFIG_HPP

#include <string>

#include <json.hpp>

#include "epigame/equilibrium.hpp"
#include "epigame/experiments.hpp"
#include "epigame/model.hpp"

namespace epigame {

/// JSON schema (documented in the README):
///   alpha, beta_P, beta_U (scalar or per-degree array), gamma, L, c_P,
///   c_IU, c_IP, epsilon, distribution{kind, d_max, n, p, masses},
///   initial{y, z_S, z_I} (scalar or array), run, horizon, step, name.
/// Throws std::invalid_argument with a descriptive message on any schema
/// or range problem.
ModelParams params_from_json(const nlohmann::json& j, const DegreeDistribution& dist);
DegreeDistribution distribution_from_json(const nlohmann::json& j);
Scenario scenario_from_json(const nlohmann::json& j);
Scenario load_scenario(const std::string& path);

struct SweepConfig {
  SweepSpec spec;
};
SweepConfig sweep_from_json(const nlohmann::json& j);
SweepConfig load_sweep(const std::string& path);

struct CompareConfig {
  ModelParams base;  // beta vectors may be single-entry (broadcast later)
  SweepParameter parameter = SweepParameter::CP;
  std::vector<double> grid;
  int d_max = 20;
  int binomial_n = 20;
  double binomial_p = 0.525;
};
CompareConfig compare_from_json(const nlohmann::json& j);
CompareConfig load_compare(const std::string& path);

nlohmann::json equilibrium_to_json(const EquilibriumResult& result);

}  // namespace epigame

#endif  // EPIGAME_CONFIG_HPP
