#ifndef EPIGAME_EULER_DETAIL_HPP
#define EPIGAME_EULER_DETAIL_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace epigame::detail {

struct EulerOutcome {
  double max_clamp = 0.0;
  bool converged = false;
  double convergence_time = 0.0;
};

// Fixed-step explicit Euler driver over a flattened state vector.
//
// rhs(x, dx) fills dx with the derivative. record(step, t, x) is called for
// step 0, every record_stride-th step, and the final step. Convergence is
// declared when every component moved less than convergence_tol over one
// time unit. Throws std::runtime_error naming the step index if the state
// turns non-finite.
//
// interior_mask marks components whose open interval (0,1) is invariant
// for the exact flow (replicator shares). When such a component starts a
// step strictly inside, the update is kept at least kInteriorFloor away
// from both boundaries: rounding a share onto (or to within half an ulp
// of) the absorbing boundary equilibria would freeze it permanently, since
// the escape increment is proportional to the boundary distance itself.
// Components that start exactly on a boundary are left there. The floor
// sits three orders of magnitude below the 1e-9 clamping-noise budget.
template <class RhsFn, class RecordFn>
EulerOutcome euler_drive(std::vector<double>& x, double step, double horizon, bool clamp,
                         bool stop_at_convergence, double convergence_tol, int record_stride,
                         RhsFn&& rhs, RecordFn&& record,
                         const std::vector<unsigned char>& interior_mask = {}) {
  if (!(step > 0.0)) throw std::invalid_argument("integration step must be positive");
  if (!(horizon >= step)) throw std::invalid_argument("horizon must cover at least one step");
  if (record_stride < 1) throw std::invalid_argument("record stride must be >= 1");

  const std::size_t dim = x.size();
  const auto total_steps = static_cast<std::size_t>(std::ceil(horizon / step - 1e-9));
  const auto steps_per_unit = static_cast<std::size_t>(std::llround(std::max(1.0, 1.0 / step)));

  // ring buffer of the last steps_per_unit+1 states for the unit-window test
  std::vector<std::vector<double>> ring(steps_per_unit + 1);
  ring[0] = x;

  EulerOutcome out;
  std::vector<double> dx(dim, 0.0);
  record(std::size_t{0}, 0.0, x);

  std::size_t last_recorded = 0;
  constexpr double kInteriorFloor = 1e-12;
  for (std::size_t n = 0; n < total_steps; ++n) {
    rhs(x, dx);
    for (std::size_t i = 0; i < dim; ++i) {
      const double prev = x[i];
      double v = prev + step * dx[i];
      if (clamp) {
        const double c = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
        const double corr = std::abs(v - c);
        if (corr > out.max_clamp) out.max_clamp = corr;
        v = c;
      }
      if (!interior_mask.empty() && interior_mask[i] && prev > 0.0 && prev < 1.0) {
        if (v < kInteriorFloor)
          v = kInteriorFloor;
        else if (v > 1.0 - kInteriorFloor)
          v = 1.0 - kInteriorFloor;
      }
      x[i] = v;
    }
    const std::size_t n1 = n + 1;
    for (std::size_t i = 0; i < dim; ++i)
      if (!std::isfinite(x[i]))
        throw std::runtime_error("non-finite state at step " + std::to_string(n1));

    const double t = static_cast<double>(n1) * step;
    if (n1 % static_cast<std::size_t>(record_stride) == 0 || n1 == total_steps) {
      record(n1, t, x);
      last_recorded = n1;
    }

    bool window_full = n1 >= steps_per_unit;
    if (window_full && !out.converged) {
      const std::vector<double>& old = ring[(n1 - steps_per_unit) % (steps_per_unit + 1)];
      double delta = 0.0;
      for (std::size_t i = 0; i < dim; ++i) delta = std::max(delta, std::abs(x[i] - old[i]));
      if (delta < convergence_tol) {
        out.converged = true;
        out.convergence_time = t;
        if (stop_at_convergence) {
          if (last_recorded != n1) record(n1, t, x);
          break;
        }
      }
    }
    ring[n1 % (steps_per_unit + 1)] = x;
  }
  return out;
}

}  // namespace epigame::detail

#endif  // EPIGAME_EULER_DETAIL_HPP
