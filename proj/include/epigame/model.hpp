#ifndef EPIGAME_MODEL_HPP
#define EPIGAME_MODEL_HPP

#include <span>
#include <string>
#include <vector>

namespace epigame {

/// Degree distribution over the contiguous degree set {1, ..., d_max}.
///
/// Constructors normalize the masses so they sum to one. `all_positive`
/// records whether every degree carries strictly positive mass; spectral
/// arguments that need strong connectivity check this flag.
struct DegreeDistribution {
  std::vector<int> degrees;    // 1..d_max, contiguous
  std::vector<double> masses;  // m_d, sums to 1
  double d_avg = 0.0;          // sum_d d * m_d
  bool all_positive = true;

  int d_max() const { return degrees.empty() ? 0 : degrees.back(); }
  std::size_t size() const { return degrees.size(); }

  static DegreeDistribution uniform(int d_max);
  /// Binomial(n, p) pmf evaluated on d = 1..d_max and renormalized over
  /// that support (mass at d = 0 and d > d_max is dropped).
  static DegreeDistribution binomial(int n, double p, int d_max);
  /// Mass 0.25 on each of {1, 2, d_max-1, d_max}; overlapping degrees
  /// accumulate. Requires d_max >= 2.
  static DegreeDistribution bimodal(int d_max);
  /// Arbitrary non-negative masses over 1..masses.size(), normalized.
  static DegreeDistribution custom(std::vector<double> masses);
};

/// Scalar game and epidemic parameters. Transmission probabilities are
/// per-degree vectors matching the companion DegreeDistribution.
struct ModelParams {
  double alpha = 0.5;          // protection effectiveness multiplier, in (0,1)
  std::vector<double> beta_P;  // transmission probability when protected
  std::vector<double> beta_U;  // transmission probability when unprotected
  double gamma = 0.3;          // recovery rate, in (0,1)
  double L = 20.0;             // loss upon infection
  double c_P = 10.0;           // cost of adopting protection
  double c_IU = 2.0;           // penalty for an unprotected infected agent
  double c_IP = 1.0;           // inconvenience of protection while infected
  double epsilon = 1.0;        // timescale separation factor, in (0,1]
};

/// Per-degree social state: infected fraction y, unprotected fractions
/// among susceptible (z_S) and infected (z_I) agents.
struct SocialState {
  std::vector<double> y;
  std::vector<double> z_S;
  std::vector<double> z_I;

  static SocialState uniform(std::size_t n, double y0, double zS0, double zI0);
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  bool ok() const { return violations.empty(); }
};

/// Checks the standing parameter assumptions (ranges, c_IU > c_IP, mass
/// normalization, vector lengths). Zero-mass degrees are warnings, not
/// violations.
ValidationReport validate(const ModelParams& params, const DegreeDistribution& dist);

/// Population-level infected fraction: sum_d m_d y^d.
double average_infection(std::span<const double> y, const DegreeDistribution& dist);

/// n copies of the same value; convenience for degree-uniform rates.
std::vector<double> uniform_rates(double value, std::size_t n);

}  // namespace epigame

#endif  // EPIGAME_MODEL_HPP
