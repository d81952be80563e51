#include "epigame/model.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace epigame {

namespace {

DegreeDistribution finalize(std::vector<double> masses) {
  DegreeDistribution dist;
  const int n = static_cast<int>(masses.size());
  double sum = std::accumulate(masses.begin(), masses.end(), 0.0);
  if (!(sum > 0.0)) throw std::invalid_argument("degree masses must have positive total");
  dist.degrees.resize(n);
  dist.masses.resize(n);
  dist.d_avg = 0.0;
  dist.all_positive = true;
  for (int i = 0; i < n; ++i) {
    dist.degrees[i] = i + 1;
    dist.masses[i] = masses[i] / sum;
    dist.d_avg += dist.degrees[i] * dist.masses[i];
    if (!(dist.masses[i] > 0.0)) dist.all_positive = false;
  }
  return dist;
}

double binomial_pmf(int n, double p, int k) {
  if (k < 0 || k > n) return 0.0;
  const double log_choose =
      std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
  return std::exp(log_choose + k * std::log(p) + (n - k) * std::log1p(-p));
}

}  // namespace

DegreeDistribution DegreeDistribution::uniform(int d_max) {
  if (d_max < 1) throw std::invalid_argument("uniform distribution needs d_max >= 1");
  return finalize(std::vector<double>(d_max, 1.0));
}

DegreeDistribution DegreeDistribution::binomial(int n, double p, int d_max) {
  if (d_max < 1) throw std::invalid_argument("binomial distribution needs d_max >= 1");
  if (n < 1) throw std::invalid_argument("binomial distribution needs n >= 1");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("binomial p must lie in (0,1)");
  std::vector<double> masses(d_max);
  for (int d = 1; d <= d_max; ++d) masses[d - 1] = binomial_pmf(n, p, d);
  return finalize(std::move(masses));
}

DegreeDistribution DegreeDistribution::bimodal(int d_max) {
  if (d_max < 2) throw std::invalid_argument("bimodal distribution needs d_max >= 2");
  std::vector<double> masses(d_max, 0.0);
  for (int d : {1, 2, d_max - 1, d_max}) masses[d - 1] += 0.25;
  return finalize(std::move(masses));
}

DegreeDistribution DegreeDistribution::custom(std::vector<double> masses) {
  if (masses.empty()) throw std::invalid_argument("custom distribution needs at least one degree");
  for (double m : masses)
    if (m < 0.0 || !std::isfinite(m))
      throw std::invalid_argument("custom distribution masses must be non-negative and finite");
  return finalize(std::move(masses));
}

SocialState SocialState::uniform(std::size_t n, double y0, double zS0, double zI0) {
  SocialState s;
  s.y.assign(n, y0);
  s.z_S.assign(n, zS0);
  s.z_I.assign(n, zI0);
  return s;
}

ValidationReport validate(const ModelParams& p, const DegreeDistribution& dist) {
  ValidationReport report;
  auto violation = [&report](const std::string& msg) { report.violations.push_back(msg); };

  auto in_open_unit = [](double v) { return v > 0.0 && v < 1.0; };
  if (!in_open_unit(p.alpha)) violation("alpha must lie in (0,1)");
  if (!in_open_unit(p.gamma)) violation("gamma must lie in (0,1)");
  if (!(p.L > 0.0)) violation("L must be positive");
  if (!(p.c_P > 0.0)) violation("c_P must be positive");
  if (!(p.c_IU > 0.0)) violation("c_IU must be positive");
  if (!(p.c_IP > 0.0)) violation("c_IP must be positive");
  if (!(p.c_IU > p.c_IP)) violation("c_IU > c_IP required");
  if (!(p.epsilon > 0.0 && p.epsilon <= 1.0)) violation("epsilon must lie in (0,1]");

  const std::size_t n = dist.size();
  if (p.beta_P.size() != n) violation("beta_P needs one entry per degree");
  if (p.beta_U.size() != n) violation("beta_U needs one entry per degree");
  for (std::size_t i = 0; i < p.beta_P.size(); ++i)
    if (!in_open_unit(p.beta_P[i])) {
      violation("beta_P[" + std::to_string(i + 1) + "] must lie in (0,1)");
      break;
    }
  for (std::size_t i = 0; i < p.beta_U.size(); ++i)
    if (!in_open_unit(p.beta_U[i])) {
      violation("beta_U[" + std::to_string(i + 1) + "] must lie in (0,1)");
      break;
    }

  if (n == 0) {
    violation("degree distribution is empty");
    return report;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (dist.degrees[i] != static_cast<int>(i) + 1) {
      violation("degrees must be contiguous from 1 to d_max");
      break;
    }
  double mass_sum = 0.0, d_avg = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (dist.masses[i] < 0.0) violation("m_" + std::to_string(i + 1) + " is negative");
    if (dist.masses[i] == 0.0)
      report.warnings.push_back("m_" + std::to_string(i + 1) +
                                " = 0; strong-connectivity arguments do not apply");
    mass_sum += dist.masses[i];
    d_avg += dist.degrees[i] * dist.masses[i];
  }
  if (std::abs(mass_sum - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "degree masses sum to " << mass_sum << ", expected 1";
    violation(os.str());
  }
  if (std::abs(d_avg - dist.d_avg) > 1e-12 * std::max(1.0, std::abs(d_avg)))
    violation("cached d_avg does not match sum_d d*m_d");

  return report;
}

double average_infection(std::span<const double> y, const DegreeDistribution& dist) {
  if (y.size() != dist.size())
    throw std::invalid_argument("average_infection: y length does not match degree set");
  double sum = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) sum += dist.masses[i] * y[i];
  return sum;
}

std::vector<double> uniform_rates(double value, std::size_t n) {
  return std::vector<double>(n, value);
}

}  // namespace epigame
