#ifndef EPIGAME_TESTS_SUPPORT_HPP
#define EPIGAME_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "epigame/model.hpp"

namespace epigame::testing {

// Table-style baseline used throughout: degrees 1..4 with equal masses,
// uniform transmission rates.
inline DegreeDistribution quarter_distribution() {
  return DegreeDistribution::custom({0.25, 0.25, 0.25, 0.25});
}

inline ModelParams baseline_params(double c_P = 10.0) {
  ModelParams p;
  p.alpha = 0.5;
  p.beta_P = uniform_rates(0.6, 4);
  p.beta_U = uniform_rates(0.7, 4);
  p.gamma = 0.3;
  p.L = 20.0;
  p.c_P = c_P;
  p.c_IU = 2.0;
  p.c_IP = 1.0;
  p.epsilon = 1.0;
  return p;
}

struct RandomModel {
  ModelParams params;
  DegreeDistribution dist;
};

// Positive-mass random model with all standing assumptions satisfied.
inline RandomModel draw_model(std::mt19937& rng, int d_max_lo = 2, int d_max_hi = 6) {
  std::uniform_int_distribution<int> d_max_draw(d_max_lo, d_max_hi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int d_max = d_max_draw(rng);

  std::vector<double> masses(d_max);
  std::exponential_distribution<double> expo(1.0);
  for (double& m : masses) m = expo(rng) + 1e-3;
  RandomModel out;
  out.dist = DegreeDistribution::custom(masses);

  auto in_range = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };
  out.params.alpha = in_range(0.05, 0.95);
  out.params.gamma = in_range(0.05, 0.95);
  out.params.L = in_range(1.0, 30.0);
  out.params.c_P = in_range(0.5, 20.0);
  out.params.c_IU = in_range(1.0, 5.0);
  out.params.c_IP = out.params.c_IU * in_range(0.1, 0.9);
  out.params.epsilon = in_range(0.1, 1.0);
  out.params.beta_P.resize(d_max);
  out.params.beta_U.resize(d_max);
  for (int i = 0; i < d_max; ++i) {
    out.params.beta_P[i] = in_range(0.05, 0.95);
    out.params.beta_U[i] = in_range(out.params.beta_P[i], 0.99);
  }
  return out;
}

inline std::vector<double> draw_unit_vector(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = unit(rng);
  return v;
}

}  // namespace epigame::testing

#endif  // EPIGAME_TESTS_SUPPORT_HPP
