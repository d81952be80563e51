#ifndef EPIGAME_REDUCED_HPP
#define EPIGAME_REDUCED_HPP

#include <optional>
#include <span>
#include <vector>

#include "epigame/dynamics.hpp"
#include "epigame/equilibrium.hpp"

namespace epigame {

/// Scale-aware tolerance for detecting that theta sits on a threshold
/// surface: |theta - theta_th| <= kBoundaryTol * max(1, theta_th). The
/// band is much narrower than one Euler step, so discrete trajectories
/// attracted to a surface usually chatter across it within
/// O(step * |dtheta/dt|) instead of engaging the sliding branch; the
/// chatter amplitude shrinks linearly with the step size.
inline constexpr double kBoundaryTol = 1e-8;

/// Location of theta within the threshold interval structure. Off the
/// surfaces, d_star identifies the open interval (theta_th^{d_star},
/// theta_th^{d_star-1}); degrees >= d_star protect, the rest do not. On a
/// surface, on_boundary holds the pinned degree d' and d_star reports the
/// interval just below (d' + 1).
struct RegimeIndex {
  int d_star = 0;
  std::optional<int> on_boundary;
};

RegimeIndex classify_regime(double theta, const ThresholdSet& th);

/// Epidemic derivative for a fixed regime d_star: degrees below d_star are
/// exposed at full weight, the rest at weight alpha.
std::vector<double> regime_rhs(std::span<const double> y, int d_star,
                               const ModelParams& params, const DegreeDistribution& dist);

struct SwitchedDerivative {
  std::vector<double> dy;
  RegimeIndex regime;
  /// Strategy selected at the boundary degree while theta sits on its
  /// surface: the sliding-mode mixing value when both one-sided fields
  /// point at the surface, otherwise the one-sided selection (0 or 1).
  std::optional<double> boundary_z;
};

/// Reduced (strategy-optimal) epidemic derivative with Filippov handling
/// on the threshold surfaces: on a surface the boundary degree's exposure
/// weight is chosen so the surface is invariant whenever the one-sided
/// fields trap theta there, and reverts to the outward field otherwise.
SwitchedDerivative switched_rhs(std::span<const double> y, const ModelParams& params,
                                const DegreeDistribution& dist, const ThresholdSet& th);
SwitchedDerivative switched_rhs(std::span<const double> y, const ModelParams& params,
                                const DegreeDistribution& dist);

/// Explicit-Euler trajectory of the switched system. The recorded states
/// carry the regime-implied strategy in z_S (mixing value at a sliding
/// boundary degree) and z_I = 0; regime_series encodes d_star, or -d' while
/// sliding on theta_th^{d'}.
Trajectory integrate_switched(std::span<const double> y0, const ModelParams& params,
                              const DegreeDistribution& dist,
                              const IntegrateOptions& opts = {});

/// Euler trajectory of the fixed-regime dynamics (no switching); the
/// epidemic side of the regime equivalence with the constructed-network
/// model.
Trajectory integrate_regime(std::span<const double> y0, int d_star,
                            const ModelParams& params, const DegreeDistribution& dist,
                            const IntegrateOptions& opts = {});

}  // namespace epigame

#endif  // EPIGAME_REDUCED_HPP
