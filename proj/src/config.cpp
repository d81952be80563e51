#include "epigame/config.hpp"

#include <fstream>
#include <stdexcept>

namespace epigame {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument("config: " + msg); }

double require_number(const json& j, const std::string& key) {
  if (!j.contains(key)) fail("missing key '" + key + "'");
  if (!j.at(key).is_number()) fail("key '" + key + "' must be a number");
  return j.at(key).get<double>();
}

double number_or(const json& j, const std::string& key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) fail("key '" + key + "' must be a number");
  return j.at(key).get<double>();
}

// scalar broadcast or per-degree array
std::vector<double> rate_vector(const json& j, const std::string& key, std::size_t n) {
  if (!j.contains(key)) fail("missing key '" + key + "'");
  const json& v = j.at(key);
  if (v.is_number()) return std::vector<double>(n, v.get<double>());
  if (v.is_array()) {
    if (v.size() != n)
      fail("key '" + key + "' needs " + std::to_string(n) + " entries, got " +
           std::to_string(v.size()));
    std::vector<double> out;
    out.reserve(n);
    for (const auto& e : v) {
      if (!e.is_number()) fail("key '" + key + "' must contain numbers");
      out.push_back(e.get<double>());
    }
    return out;
  }
  fail("key '" + key + "' must be a number or an array");
}

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    fail("'" + path + "' is not valid JSON: " + e.what());
  }
  return j;
}

SweepParameter parameter_from_string(const std::string& name) {
  if (name == "alpha") return SweepParameter::Alpha;
  if (name == "beta_P") return SweepParameter::BetaP;
  if (name == "c_P") return SweepParameter::CP;
  if (name == "m_4") return SweepParameter::M4;
  fail("unknown sweep parameter '" + name + "' (expected alpha, beta_P, c_P or m_4)");
}

std::vector<double> grid_from_json(const json& j, int default_points) {
  if (!j.contains("grid")) fail("missing key 'grid'");
  const json& g = j.at("grid");
  if (g.is_array()) {
    std::vector<double> out;
    for (const auto& e : g) {
      if (!e.is_number()) fail("grid values must be numbers");
      out.push_back(e.get<double>());
    }
    return out;
  }
  if (g.is_object()) {
    const double from = require_number(g, "from");
    const double to = require_number(g, "to");
    int points = default_points;
    if (g.contains("points")) points = g.at("points").get<int>();
    if (points < 2) fail("grid needs at least two points");
    return linspace(from, to, points);
  }
  fail("'grid' must be an array of values or {from, to, points}");
}

}  // namespace

DegreeDistribution distribution_from_json(const json& j) {
  if (!j.contains("distribution")) fail("missing key 'distribution'");
  const json& d = j.at("distribution");
  if (!d.is_object()) fail("'distribution' must be an object");
  const std::string kind = d.value("kind", "");
  if (kind == "uniform") return DegreeDistribution::uniform(d.value("d_max", 0));
  if (kind == "bimodal") return DegreeDistribution::bimodal(d.value("d_max", 0));
  if (kind == "binomial")
    return DegreeDistribution::binomial(d.value("n", 0), number_or(d, "p", 0.0),
                                        d.value("d_max", 0));
  if (kind == "custom") {
    if (!d.contains("masses") || !d.at("masses").is_array())
      fail("custom distribution needs a 'masses' array");
    return DegreeDistribution::custom(d.at("masses").get<std::vector<double>>());
  }
  fail("distribution kind must be uniform, binomial, bimodal or custom");
}

ModelParams params_from_json(const json& j, const DegreeDistribution& dist) {
  ModelParams p;
  p.alpha = require_number(j, "alpha");
  p.gamma = require_number(j, "gamma");
  p.L = require_number(j, "L");
  p.c_P = require_number(j, "c_P");
  p.c_IU = require_number(j, "c_IU");
  p.c_IP = require_number(j, "c_IP");
  p.epsilon = number_or(j, "epsilon", 1.0);
  p.beta_P = rate_vector(j, "beta_P", dist.size());
  p.beta_U = rate_vector(j, "beta_U", dist.size());
  return p;
}

Scenario scenario_from_json(const json& j) {
  Scenario sc;
  sc.dist = distribution_from_json(j);
  sc.params = params_from_json(j, sc.dist);
  sc.name = j.value("name", "scenario");
  sc.horizon = number_or(j, "horizon", 5000.0);
  sc.step = number_or(j, "step", 0.01);
  sc.record_stride = j.value("record_stride", 1);

  const std::string run = j.value("run", "coupled");
  if (run == "coupled")
    sc.mode = RunMode::Coupled;
  else if (run == "switched")
    sc.mode = RunMode::Switched;
  else if (run == "equilibrium-only")
    sc.mode = RunMode::EquilibriumOnly;
  else
    fail("run must be coupled, switched or equilibrium-only");

  const std::size_t n = sc.dist.size();
  if (j.contains("initial")) {
    const json& init = j.at("initial");
    sc.initial.y = rate_vector(init, "y", n);
    sc.initial.z_S = init.contains("z_S") ? rate_vector(init, "z_S", n)
                                          : std::vector<double>(n, 0.5);
    sc.initial.z_I = init.contains("z_I") ? rate_vector(init, "z_I", n)
                                          : std::vector<double>(n, 0.5);
  } else {
    sc.initial = SocialState::uniform(n, 0.1, 0.5, 0.5);
  }

  const auto report = validate(sc.params, sc.dist);
  if (!report.ok()) {
    std::string msg = "invalid parameters:";
    for (const auto& v : report.violations) msg += " " + v + ";";
    fail(msg);
  }
  return sc;
}

Scenario load_scenario(const std::string& path) { return scenario_from_json(parse_file(path)); }

SweepConfig sweep_from_json(const json& j) {
  SweepConfig cfg;
  if (!j.contains("base")) fail("sweep config needs a 'base' scenario");
  cfg.spec.base = scenario_from_json(j.at("base"));
  if (!j.contains("parameter") || !j.at("parameter").is_string())
    fail("sweep config needs a string 'parameter'");
  cfg.spec.parameter = parameter_from_string(j.at("parameter").get<std::string>());
  cfg.spec.grid = grid_from_json(j, 33);
  cfg.spec.out_path = j.value("out", "");
  return cfg;
}

SweepConfig load_sweep(const std::string& path) { return sweep_from_json(parse_file(path)); }

CompareConfig compare_from_json(const json& j) {
  CompareConfig cfg;
  cfg.d_max = j.value("d_max", 20);
  if (cfg.d_max < 2) fail("compare config needs d_max >= 2");
  if (j.contains("binomial")) {
    cfg.binomial_n = j.at("binomial").value("n", 20);
    cfg.binomial_p = number_or(j.at("binomial"), "p", 0.525);
  }
  if (!j.contains("parameter") || !j.at("parameter").is_string())
    fail("compare config needs a string 'parameter'");
  cfg.parameter = parameter_from_string(j.at("parameter").get<std::string>());
  if (cfg.parameter == SweepParameter::M4) fail("compare config cannot sweep m_4");
  cfg.grid = grid_from_json(j, 33);

  cfg.base.alpha = require_number(j, "alpha");
  cfg.base.gamma = require_number(j, "gamma");
  cfg.base.L = require_number(j, "L");
  cfg.base.c_P = require_number(j, "c_P");
  cfg.base.c_IU = require_number(j, "c_IU");
  cfg.base.c_IP = require_number(j, "c_IP");
  cfg.base.epsilon = number_or(j, "epsilon", 1.0);
  cfg.base.beta_P = {require_number(j, "beta_P")};
  cfg.base.beta_U = {require_number(j, "beta_U")};
  return cfg;
}

CompareConfig load_compare(const std::string& path) {
  return compare_from_json(parse_file(path));
}

nlohmann::json equilibrium_to_json(const EquilibriumResult& r) {
  json j;
  j["regime"] = to_string(r.regime);
  j["theta_star"] = r.theta_star;
  j["d_eq"] = r.d_eq;
  j["y"] = r.y_star;
  j["zS"] = r.z_S_star;
  j["R_max"] = r.R_max;
  return j;
}

}  // namespace epigame
