#ifndef EPIGAME_EQUILIBRIUM_HPP
#define EPIGAME_EQUILIBRIUM_HPP

#include <optional>
#include <string>
#include <vector>

#include "epigame/model.hpp"

namespace epigame {

/// Per-degree protection thresholds theta_th^d = c_P / (L (1-alpha) d),
/// strictly decreasing in d, plus the interval structure they induce on
/// [0,1]. By convention theta_th^{d_max+1} = 0.
struct ThresholdSet {
  std::vector<double> theta_th;  // index d-1 holds theta_th^d
  std::optional<int> d_min;      // smallest degree with theta_th^d < 1
  bool no_protection = false;    // no degree ever protects (theta_th^{d_max} >= 1)

  double at(int degree) const;  // degrees 1..d_max+1
  /// Bounds of the interval indexed by d in {d_min, ..., d_max+1}:
  /// lower = theta_th^d, upper = min(1, theta_th^{d-1}). The lowest interval
  /// is closed at 0, the rest are open at the lower end.
  std::pair<double, double> interval(int d) const;
  int d_max() const { return static_cast<int>(theta_th.size()); }
};

ThresholdSet thresholds(const ModelParams& params, const DegreeDistribution& dist);

/// Reproduction number of the fixed-regime epidemic in which degrees below
/// d_star stay unprotected and the rest adopt protection:
/// sum_{d<d_star} d^2 m_d beta_P^d / (d_avg gamma) + alpha-scaled tail.
/// Monotonically increasing in d_star.
double reproduction_number(int d_star, const ModelParams& params,
                           const DegreeDistribution& dist);

/// Stationarity sum of the fixed-regime epidemic at a given theta; equals 1
/// at the endemic fixed point and is strictly decreasing in theta.
double endemic_sum(int d_star, double theta, const ModelParams& params,
                   const DegreeDistribution& dist);

/// Endemic transmission pressure of the fixed-regime epidemic: 0 when
/// reproduction_number(d_star) <= 1, otherwise the unique root of
/// endemic_sum(d_star, .) = 1 in (0,1).
double theta_ee(int d_star, const ModelParams& params, const DegreeDistribution& dist);

/// Mixing fraction of unprotected susceptible agents at degree d_eq - 1
/// for a boundary equilibrium pinned at theta_th^{d_eq-1}. Solves the
/// residual-mass identity in closed form (the boundary-degree term is a
/// Moebius function of the exposure weight). Throws std::runtime_error if
/// the solution leaves [0,1] by more than rounding noise, which signals an
/// inconsistent case classification upstream.
double boundary_mixing_fraction(int d_eq, const ModelParams& params,
                                const DegreeDistribution& dist);

enum class EquilibriumRegime { DfeOnly, EndemicInterior, EndemicBoundary };
std::string to_string(EquilibriumRegime regime);

/// Complete equilibrium description of the switched epidemic.
struct EquilibriumResult {
  EquilibriumRegime regime = EquilibriumRegime::DfeOnly;
  double theta_star = 0.0;
  int d_eq = 0;  // pivot degree; 0 for the disease-free case
  std::vector<double> y_star;
  std::vector<double> z_S_star;  // 1 unprotected, 0 protected, mixing value at the boundary degree
  double R_max = 0.0;            // reproduction_number(d_max + 1)
};

/// Full equilibrium classification: disease-free only when
/// R(d_max+1) <= 1; otherwise scans for the pivot degree d_eq and returns
/// either the interior endemic equilibrium at theta_ee(d_eq) or the
/// boundary equilibrium pinned at theta_th^{d_eq-1} with a mixed strategy
/// at degree d_eq-1. Comparisons against thresholds use a 1e-12 slack and
/// resolve ties toward the boundary case (the closed set).
EquilibriumResult find_equilibrium(const ModelParams& params, const DegreeDistribution& dist);

}  // namespace epigame

#endif  // EPIGAME_EQUILIBRIUM_HPP
