#ifndef EPIGAME_DYNAMICS_HPP
#define EPIGAME_DYNAMICS_HPP

#include <span>
#include <vector>

#include "epigame/model.hpp"

namespace epigame {

/// Time-indexed simulation record. All series share the same length; the
/// recorded times advance by a constant multiple of the integration step.
/// For infection-only (switched) runs, z_S holds the regime-implied
/// strategy, z_I is identically zero and regime_series is populated
/// (d_star off the threshold surfaces, -d' while sliding on theta_th^{d'}).
struct Trajectory {
  std::vector<double> times;
  std::vector<SocialState> states;
  std::vector<double> theta_series;
  std::vector<double> y_avg_series;
  std::vector<int> regime_series;
  double step = 0.0;
  double max_clamp = 0.0;  // largest [0,1]-clamping correction applied
  bool converged = false;
  double convergence_time = 0.0;
};

struct IntegrateOptions {
  double step = 0.01;
  double horizon = 5000.0;
  bool clamp = true;
  bool stop_at_convergence = true;
  // converged when every component moves less than this over one time unit
  double convergence_tol = 1e-6;
  int record_stride = 1;
};

/// Transmission pressure from a random neighbor:
/// sum_d (d m_d / d_avg) (beta_U^d z_I^d + beta_P^d (1 - z_I^d)) y^d.
double theta_full(const SocialState& state, const ModelParams& params,
                  const DegreeDistribution& dist);

/// Specialization with all infected agents protected (z_I = 0):
/// sum_d (d m_d / d_avg) beta_P^d y^d. Agrees with theta_full bit for bit
/// when z_I is identically zero.
double theta_reduced(std::span<const double> y, const ModelParams& params,
                     const DegreeDistribution& dist);

/// Slow-fast coupled derivative: epidemic flow for y and replicator flows
/// for z_S and z_I, the latter two divided by epsilon.
SocialState coupled_rhs(const SocialState& state, const ModelParams& params,
                        const DegreeDistribution& dist);

/// Explicit-Euler trajectory of the coupled system. Components are clamped
/// to [0,1] after each step (unless disabled); the largest correction is
/// recorded in Trajectory::max_clamp. Strategy shares that start strictly
/// inside (0,1) are kept at interior representable values: the open
/// interval is invariant for the replicator flow, and letting rounding
/// absorb a share into 0 or 1 would freeze it there. Throws
/// std::runtime_error with the offending step index if the state turns
/// non-finite.
Trajectory integrate_coupled(const SocialState& initial, const ModelParams& params,
                             const DegreeDistribution& dist,
                             const IntegrateOptions& opts = {});

/// Bracketed stationarity sum for a fixed strategy profile. Equals 1 at a
/// positive stationary theta, is strictly decreasing in theta, and at
/// theta = 0 gives the profile reproduction number of the invasion
/// condition (> 1 iff a positive stationary theta exists).
double fixed_point_sum(double theta, std::span<const double> z_S,
                       std::span<const double> z_I, const ModelParams& params,
                       const DegreeDistribution& dist);

/// fixed_point_sum at theta = 0; the profile-dependent reproduction number.
double profile_reproduction_number(std::span<const double> z_S,
                                   std::span<const double> z_I,
                                   const ModelParams& params,
                                   const DegreeDistribution& dist);

struct StationaryTheta {
  double theta = 0.0;      // 0 when only the disease-free state is stationary
  std::vector<double> y;   // per-degree infected fractions at theta
};

/// Stationary transmission pressure for a frozen strategy profile: returns
/// zero when the invasion condition fails, otherwise bisects the monotone
/// stationarity identity on (0,1) and reports the per-degree infected
/// fractions of the fixed point.
StationaryTheta stationary_theta_for_profile(std::span<const double> z_S,
                                             std::span<const double> z_I,
                                             const ModelParams& params,
                                             const DegreeDistribution& dist);

}  // namespace epigame

#endif  // EPIGAME_DYNAMICS_HPP
