#include "epigame/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "euler_detail.hpp"

namespace epigame {

namespace {

void check_lengths(std::size_t got, const DegreeDistribution& dist, const char* what) {
  if (got != dist.size())
    throw std::invalid_argument(std::string(what) + ": length does not match degree set");
}

}  // namespace

double theta_full(const SocialState& state, const ModelParams& params,
                  const DegreeDistribution& dist) {
  check_lengths(state.y.size(), dist, "theta_full");
  double sum = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const double d = dist.degrees[i];
    const double transmit =
        params.beta_U[i] * state.z_I[i] + params.beta_P[i] * (1.0 - state.z_I[i]);
    sum += d * dist.masses[i] / dist.d_avg * transmit * state.y[i];
  }
  return sum;
}

double theta_reduced(std::span<const double> y, const ModelParams& params,
                     const DegreeDistribution& dist) {
  check_lengths(y.size(), dist, "theta_reduced");
  double sum = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const double d = dist.degrees[i];
    const double transmit = params.beta_P[i];
    sum += d * dist.masses[i] / dist.d_avg * transmit * y[i];
  }
  return sum;
}

SocialState coupled_rhs(const SocialState& state, const ModelParams& params,
                        const DegreeDistribution& dist) {
  check_lengths(state.y.size(), dist, "coupled_rhs");
  const double theta = theta_full(state, params, dist);
  const std::size_t n = dist.size();
  SocialState rate;
  rate.y.resize(n);
  rate.z_S.resize(n);
  rate.z_I.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = dist.degrees[i];
    const double w = state.z_S[i] + params.alpha * (1.0 - state.z_S[i]);
    rate.y[i] = -params.gamma * state.y[i] + (1.0 - state.y[i]) * w * d * theta;
    rate.z_S[i] = state.z_S[i] * (1.0 - state.z_S[i]) *
                  (params.c_P - params.L * (1.0 - params.alpha) * d * theta) / params.epsilon;
    rate.z_I[i] =
        state.z_I[i] * (1.0 - state.z_I[i]) * (params.c_IP - params.c_IU) / params.epsilon;
  }
  return rate;
}

Trajectory integrate_coupled(const SocialState& initial, const ModelParams& params,
                             const DegreeDistribution& dist, const IntegrateOptions& opts) {
  check_lengths(initial.y.size(), dist, "integrate_coupled");
  check_lengths(initial.z_S.size(), dist, "integrate_coupled");
  check_lengths(initial.z_I.size(), dist, "integrate_coupled");
  const std::size_t n = dist.size();

  // flattened layout: [y | z_S | z_I]
  std::vector<double> x(3 * n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = initial.y[i];
    x[n + i] = initial.z_S[i];
    x[2 * n + i] = initial.z_I[i];
  }

  Trajectory traj;
  traj.step = opts.step;
  SocialState scratch = initial;

  auto unpack = [n](const std::vector<double>& v, SocialState& s) {
    s.y.assign(v.begin(), v.begin() + n);
    s.z_S.assign(v.begin() + n, v.begin() + 2 * n);
    s.z_I.assign(v.begin() + 2 * n, v.begin() + 3 * n);
  };

  auto rhs = [&](const std::vector<double>& v, std::vector<double>& dv) {
    unpack(v, scratch);
    const SocialState rate = coupled_rhs(scratch, params, dist);
    for (std::size_t i = 0; i < n; ++i) {
      dv[i] = rate.y[i];
      dv[n + i] = rate.z_S[i];
      dv[2 * n + i] = rate.z_I[i];
    }
  };

  auto record = [&](std::size_t, double t, const std::vector<double>& v) {
    unpack(v, scratch);
    traj.times.push_back(t);
    traj.states.push_back(scratch);
    traj.theta_series.push_back(theta_full(scratch, params, dist));
    traj.y_avg_series.push_back(average_infection(scratch.y, dist));
  };

  // strategy shares never leave the open unit interval under the exact flow
  std::vector<unsigned char> interior_mask(3 * n, 0);
  for (std::size_t i = n; i < 3 * n; ++i) interior_mask[i] = 1;

  const auto outcome =
      detail::euler_drive(x, opts.step, opts.horizon, opts.clamp, opts.stop_at_convergence,
                          opts.convergence_tol, opts.record_stride, rhs, record, interior_mask);
  traj.max_clamp = outcome.max_clamp;
  traj.converged = outcome.converged;
  traj.convergence_time = outcome.convergence_time;
  return traj;
}

double fixed_point_sum(double theta, std::span<const double> z_S, std::span<const double> z_I,
                       const ModelParams& params, const DegreeDistribution& dist) {
  check_lengths(z_S.size(), dist, "fixed_point_sum");
  check_lengths(z_I.size(), dist, "fixed_point_sum");
  double sum = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const double d = dist.degrees[i];
    const double transmit = params.beta_U[i] * z_I[i] + params.beta_P[i] * (1.0 - z_I[i]);
    const double w = z_S[i] + params.alpha * (1.0 - z_S[i]);
    sum += d * dist.masses[i] / dist.d_avg * transmit * (w * d) / (params.gamma + w * d * theta);
  }
  return sum;
}

double profile_reproduction_number(std::span<const double> z_S, std::span<const double> z_I,
                                   const ModelParams& params, const DegreeDistribution& dist) {
  return fixed_point_sum(0.0, z_S, z_I, params, dist);
}

StationaryTheta stationary_theta_for_profile(std::span<const double> z_S,
                                             std::span<const double> z_I,
                                             const ModelParams& params,
                                             const DegreeDistribution& dist) {
  StationaryTheta result;
  result.y.assign(dist.size(), 0.0);
  if (!(profile_reproduction_number(z_S, z_I, params, dist) > 1.0)) return result;

  // The sum is strictly decreasing in theta, exceeds 1 at 0 and is below 1
  // at 1, so the positive root lies in (0,1) and bisection is global.
  double lo = 0.0, hi = 1.0;
  for (int iter = 0; iter < 200 && (hi - lo) > 1e-15; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (fixed_point_sum(mid, z_S, z_I, params, dist) > 1.0)
      lo = mid;
    else
      hi = mid;
  }
  result.theta = 0.5 * (lo + hi);
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const double d = dist.degrees[i];
    const double w = z_S[i] + params.alpha * (1.0 - z_S[i]);
    result.y[i] = w * d * result.theta / (params.gamma + w * d * result.theta);
  }
  return result;
}

}  // namespace epigame
