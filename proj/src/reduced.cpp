#include "epigame/reduced.hpp"

#include <cmath>
#include <stdexcept>

#include "euler_detail.hpp"

namespace epigame {

namespace {

void check_y(std::span<const double> y, const DegreeDistribution& dist, const char* what) {
  if (y.size() != dist.size())
    throw std::invalid_argument(std::string(what) + ": y length does not match degree set");
}

double boundary_distance(double theta, double threshold) {
  return std::abs(theta - threshold) / std::max(1.0, threshold);
}

}  // namespace

RegimeIndex classify_regime(double theta, const ThresholdSet& th) {
  if (!(theta >= 0.0 && theta <= 1.0))
    throw std::invalid_argument("classify_regime: theta must lie in [0,1]");
  const int d_max = th.d_max();

  RegimeIndex regime;
  double best = kBoundaryTol;
  for (int d = 1; d <= d_max; ++d) {
    const double dist = boundary_distance(theta, th.at(d));
    if (dist <= best) {
      best = dist;
      regime.on_boundary = d;
    }
  }
  if (regime.on_boundary) {
    regime.d_star = *regime.on_boundary + 1;
    return regime;
  }
  regime.d_star = d_max + 1;
  for (int d = 1; d <= d_max; ++d)
    if (th.at(d) < theta) {
      regime.d_star = d;
      break;
    }
  return regime;
}

std::vector<double> regime_rhs(std::span<const double> y, int d_star,
                               const ModelParams& params, const DegreeDistribution& dist) {
  check_y(y, dist, "regime_rhs");
  const double theta = theta_reduced(y, params, dist);
  std::vector<double> dy(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const double d = dist.degrees[i];
    const double w = dist.degrees[i] < d_star ? 1.0 : params.alpha;
    dy[i] = -params.gamma * y[i] + (1.0 - y[i]) * w * d * theta;
  }
  return dy;
}

SwitchedDerivative switched_rhs(std::span<const double> y, const ModelParams& params,
                                const DegreeDistribution& dist, const ThresholdSet& th) {
  check_y(y, dist, "switched_rhs");
  const double theta = theta_reduced(y, params, dist);
  SwitchedDerivative out;
  out.regime = classify_regime(std::min(1.0, std::max(0.0, theta)), th);

  if (!out.regime.on_boundary) {
    out.dy = regime_rhs(y, out.regime.d_star, params, dist);
    return out;
  }

  // Sliding analysis on theta = theta_th^{d_b}. All other degrees take
  // their pure regime field; the time derivative of theta is affine in the
  // boundary degree's exposure weight w in [alpha, 1].
  const int d_b = *out.regime.on_boundary;
  const std::size_t ib = static_cast<std::size_t>(d_b) - 1;
  out.dy.resize(dist.size());
  double drift = 0.0;  // contribution of the non-boundary degrees to dtheta/dt
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (i == ib) continue;
    const double d = dist.degrees[i];
    const double w = dist.degrees[i] < d_b ? 1.0 : params.alpha;
    out.dy[i] = -params.gamma * y[i] + (1.0 - y[i]) * w * d * theta;
    drift += d * dist.masses[i] / dist.d_avg * params.beta_P[i] * out.dy[i];
  }
  const double c_b = d_b * dist.masses[ib] / dist.d_avg * params.beta_P[ib];
  const double slope = c_b * (1.0 - y[ib]) * d_b * theta;      // dtheta/dt gain per unit w
  const double offset = drift - c_b * params.gamma * y[ib];    // dtheta/dt at w = 0
  const double flow_protected = offset + slope * params.alpha;
  const double flow_unprotected = offset + slope * 1.0;

  double w_b;
  if (flow_unprotected < 0.0) {
    // both one-sided fields push theta below the surface
    w_b = 1.0;
    out.boundary_z = 1.0;
  } else if (flow_protected > 0.0) {
    // both push above
    w_b = params.alpha;
    out.boundary_z = 0.0;
  } else if (slope > 0.0) {
    // trapped: pick the convex combination that freezes theta
    w_b = -offset / slope;
    out.boundary_z = (w_b - params.alpha) / (1.0 - params.alpha);
  } else {
    // degenerate surface-stationary field; either selection keeps theta
    w_b = params.alpha;
    out.boundary_z = 0.0;
  }
  out.dy[ib] = -params.gamma * y[ib] + (1.0 - y[ib]) * w_b * d_b * theta;
  return out;
}

SwitchedDerivative switched_rhs(std::span<const double> y, const ModelParams& params,
                                const DegreeDistribution& dist) {
  return switched_rhs(y, params, dist, thresholds(params, dist));
}

namespace {

// Shared Euler loop for the infection-only trajectories; fills the
// regime-implied strategy into the recorded states.
template <class DeriveFn>
Trajectory integrate_infection_only(std::span<const double> y0, const ModelParams& params,
                                    const DegreeDistribution& dist, const IntegrateOptions& opts,
                                    DeriveFn&& derive) {
  const std::size_t n = dist.size();
  std::vector<double> x(y0.begin(), y0.end());

  Trajectory traj;
  traj.step = opts.step;

  auto rhs = [&](const std::vector<double>& v, std::vector<double>& dv) {
    SwitchedDerivative d = derive(v);
    dv = std::move(d.dy);
  };
  auto record = [&](std::size_t, double t, const std::vector<double>& v) {
    SwitchedDerivative d = derive(v);
    SocialState s;
    s.y.assign(v.begin(), v.end());
    s.z_I.assign(n, 0.0);
    s.z_S.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      s.z_S[i] = dist.degrees[i] < d.regime.d_star ? 1.0 : 0.0;
    int regime_code = d.regime.d_star;
    if (d.regime.on_boundary) {
      regime_code = -*d.regime.on_boundary;
      if (d.boundary_z) s.z_S[*d.regime.on_boundary - 1] = *d.boundary_z;
    }
    traj.times.push_back(t);
    traj.theta_series.push_back(theta_reduced(s.y, params, dist));
    traj.y_avg_series.push_back(average_infection(s.y, dist));
    traj.regime_series.push_back(regime_code);
    traj.states.push_back(std::move(s));
  };

  const auto outcome =
      detail::euler_drive(x, opts.step, opts.horizon, opts.clamp, opts.stop_at_convergence,
                          opts.convergence_tol, opts.record_stride, rhs, record);
  traj.max_clamp = outcome.max_clamp;
  traj.converged = outcome.converged;
  traj.convergence_time = outcome.convergence_time;
  return traj;
}

}  // namespace

Trajectory integrate_switched(std::span<const double> y0, const ModelParams& params,
                              const DegreeDistribution& dist, const IntegrateOptions& opts) {
  check_y(y0, dist, "integrate_switched");
  const auto th = thresholds(params, dist);
  return integrate_infection_only(
      y0, params, dist, opts,
      [&](std::span<const double> y) { return switched_rhs(y, params, dist, th); });
}

Trajectory integrate_regime(std::span<const double> y0, int d_star, const ModelParams& params,
                            const DegreeDistribution& dist, const IntegrateOptions& opts) {
  check_y(y0, dist, "integrate_regime");
  return integrate_infection_only(y0, params, dist, opts, [&](std::span<const double> y) {
    SwitchedDerivative d;
    d.dy = regime_rhs(y, d_star, params, dist);
    d.regime.d_star = d_star;
    return d;
  });
}

}  // namespace epigame
