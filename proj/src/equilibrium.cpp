#include "epigame/equilibrium.hpp"

#include <cmath>
#include <stdexcept>

#include "epigame/dynamics.hpp"

namespace epigame {

namespace {

constexpr double kCaseSlack = 1e-12;

void check_d_star(int d_star, const DegreeDistribution& dist, const char* what) {
  if (d_star < 1 || d_star > dist.d_max() + 1)
    throw std::invalid_argument(std::string(what) + ": d_star must lie in 1..d_max+1");
}

// Strategy profile of the fixed regime: unprotected below d_star,
// protected at and above.
std::vector<double> regime_profile(int d_star, std::size_t n) {
  std::vector<double> z(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    if (static_cast<int>(i) + 1 < d_star) z[i] = 1.0;
  return z;
}

std::vector<double> equilibrium_infections(double theta, std::span<const double> z_S,
                                           const ModelParams& p, const DegreeDistribution& dist) {
  std::vector<double> y(dist.size(), 0.0);
  if (theta <= 0.0) return y;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const double d = dist.degrees[i];
    const double w = z_S[i] + p.alpha * (1.0 - z_S[i]);
    y[i] = w * d * theta / (p.gamma + w * d * theta);
  }
  return y;
}

}  // namespace

double ThresholdSet::at(int degree) const {
  if (degree == d_max() + 1) return 0.0;
  if (degree < 1 || degree > d_max())
    throw std::invalid_argument("ThresholdSet::at: degree out of range");
  return theta_th[degree - 1];
}

std::pair<double, double> ThresholdSet::interval(int d) const {
  const double lower = at(d);
  const double upper = d >= 2 ? std::min(1.0, at(d - 1)) : 1.0;
  return {lower, upper};
}

ThresholdSet thresholds(const ModelParams& params, const DegreeDistribution& dist) {
  ThresholdSet set;
  set.theta_th.resize(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const double d = dist.degrees[i];
    set.theta_th[i] = params.c_P / (params.L * (1.0 - params.alpha) * d);
  }
  for (std::size_t i = 0; i < set.theta_th.size(); ++i)
    if (set.theta_th[i] < 1.0) {
      set.d_min = static_cast<int>(i) + 1;
      break;
    }
  set.no_protection = !set.d_min.has_value();
  return set;
}

double reproduction_number(int d_star, const ModelParams& params,
                           const DegreeDistribution& dist) {
  check_d_star(d_star, dist, "reproduction_number");
  double sum = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const double d = dist.degrees[i];
    const double term = d * d * dist.masses[i] * params.beta_P[i] / (dist.d_avg * params.gamma);
    sum += (dist.degrees[i] < d_star) ? term : params.alpha * term;
  }
  return sum;
}

double endemic_sum(int d_star, double theta, const ModelParams& params,
                   const DegreeDistribution& dist) {
  check_d_star(d_star, dist, "endemic_sum");
  const auto z_S = regime_profile(d_star, dist.size());
  const std::vector<double> z_I(dist.size(), 0.0);
  return fixed_point_sum(theta, z_S, z_I, params, dist);
}

double theta_ee(int d_star, const ModelParams& params, const DegreeDistribution& dist) {
  check_d_star(d_star, dist, "theta_ee");
  if (!(reproduction_number(d_star, params, dist) > 1.0)) return 0.0;
  double lo = 0.0, hi = 1.0;
  for (int iter = 0; iter < 200 && (hi - lo) > 1e-15; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (endemic_sum(d_star, mid, params, dist) > 1.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double boundary_mixing_fraction(int d_eq, const ModelParams& params,
                                const DegreeDistribution& dist) {
  if (d_eq < 2 || d_eq > dist.d_max() + 1)
    throw std::invalid_argument("boundary_mixing_fraction: d_eq must lie in 2..d_max+1");
  const auto th = thresholds(params, dist);
  const int d_b = d_eq - 1;  // boundary degree
  const double theta_b = th.at(d_b);

  // Residual mass once every other degree contributes at its pure strategy.
  double residual = 1.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const int d = dist.degrees[i];
    if (d == d_b) continue;
    const double dd = d;
    const double c = dd * dist.masses[i] * params.beta_P[i] / dist.d_avg;
    if (d < d_b)
      residual -= c * dd / (params.gamma + dd * theta_b);
    else
      residual -= c * params.alpha * dd / (params.gamma + params.alpha * dd * theta_b);
  }

  // residual = K w / (gamma + w d_b theta_b) with K = d_b^2 m beta_P / d_avg,
  // solved for the exposure weight w = z + alpha (1 - z).
  const double k = static_cast<double>(d_b) * d_b * dist.masses[d_b - 1] *
                   params.beta_P[d_b - 1] / dist.d_avg;
  const double denom = k - residual * d_b * theta_b;
  if (!(denom > 0.0))
    throw std::runtime_error("boundary_mixing_fraction: degenerate boundary-degree term");
  const double w = residual * params.gamma / denom;
  double z = (w - params.alpha) / (1.0 - params.alpha);
  if (z < 0.0 && z >= -1e-12) z = 0.0;
  if (z > 1.0 && z <= 1.0 + 1e-12) z = 1.0;
  if (z < 0.0 || z > 1.0)
    throw std::runtime_error("boundary_mixing_fraction: mixing fraction outside [0,1]; "
                             "case classification inconsistent");
  return z;
}

std::string to_string(EquilibriumRegime regime) {
  switch (regime) {
    case EquilibriumRegime::DfeOnly: return "dfe-only";
    case EquilibriumRegime::EndemicInterior: return "endemic-interior";
    case EquilibriumRegime::EndemicBoundary: return "endemic-boundary";
  }
  return "unknown";
}

EquilibriumResult find_equilibrium(const ModelParams& params, const DegreeDistribution& dist) {
  const int d_max = dist.d_max();
  EquilibriumResult result;
  result.R_max = reproduction_number(d_max + 1, params, dist);
  result.y_star.assign(dist.size(), 0.0);
  result.z_S_star.assign(dist.size(), 1.0);  // protection is dominated at theta = 0

  if (!(result.R_max > 1.0)) return result;

  const auto th = thresholds(params, dist);
  // In the no-protection regime every threshold is >= 1, so only the
  // all-unprotected pivot d_max+1 can qualify; the scan below covers it.
  const int scan_from = th.d_min.value_or(d_max + 1);
  for (int d = scan_from; d <= d_max + 1; ++d) {
    const double te = theta_ee(d, params, dist);
    const double slack = d <= d_max ? kCaseSlack : 0.0;  // th.at(d_max+1) is exactly 0
    if (!(te > th.at(d) + slack)) continue;
    result.d_eq = d;
    // the previous threshold binds only when some degree below d can
    // actually be indifferent, i.e. theta_th^{d-1} < 1
    const bool prev_feasible = d >= 2 && th.at(d - 1) < 1.0;
    if (prev_feasible && te >= th.at(d - 1) - kCaseSlack) {
      // boundary case: theta pinned at the next threshold up, mixed
      // strategy at degree d-1
      result.regime = EquilibriumRegime::EndemicBoundary;
      result.theta_star = th.at(d - 1);
      result.z_S_star = regime_profile(d, dist.size());
      result.z_S_star[d - 2] = boundary_mixing_fraction(d, params, dist);
      result.y_star = equilibrium_infections(result.theta_star, result.z_S_star, params, dist);
    } else {
      result.regime = EquilibriumRegime::EndemicInterior;
      result.theta_star = te;
      result.z_S_star = regime_profile(d, dist.size());
      result.y_star = equilibrium_infections(te, result.z_S_star, params, dist);
    }
    return result;
  }
  throw std::logic_error("find_equilibrium: pivot scan failed despite R(d_max+1) > 1");
}

}  // namespace epigame
