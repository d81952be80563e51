#ifndef EPIGAME_NIMFA_HPP
#define EPIGAME_NIMFA_HPP

#include <span>
#include <string>
#include <vector>

#include "epigame/model.hpp"

namespace epigame {

/// Directed weighted contact graph for per-node infection dynamics.
/// adjacency is row-major; at(i, j) is the weight with which node j
/// transmits to node i (zero means no edge j -> i).
struct DirectedWeightedGraph {
  int n = 0;
  std::vector<double> adjacency;
  std::vector<double> recovery;  // per-node recovery rate, > 0

  double at(int i, int j) const { return adjacency[static_cast<std::size_t>(i) * n + j]; }
  double& at(int i, int j) { return adjacency[static_cast<std::size_t>(i) * n + j]; }
  bool strongly_connected() const;
};

/// Factors of the rank-one normalized adjacency: D^{-1} A = v1 v2^T.
struct RankOneFactors {
  std::vector<double> v1;
  std::vector<double> v2;
};

struct AbarGraph {
  DirectedWeightedGraph graph;
  RankOneFactors factors;
};

/// Degree-class contact graph equivalent to the fixed-regime epidemic:
/// one node per degree, weight (d / d_avg) d' m_{d'} beta_P^{d'} from
/// class d' into class d, scaled by alpha on rows d >= d_star. Uniform
/// recovery rate gamma.
AbarGraph build_abar(int d_star, const ModelParams& params, const DegreeDistribution& dist);

/// Spectral radius of D^{-1} A by power iteration (Collatz-Wielandt
/// bounds, relative tolerance 1e-10). Throws std::runtime_error if the
/// bounds have not met after 1e5 iterations.
double spectral_radius(const DirectedWeightedGraph& g);

/// Inner product v1 . v2; the spectral radius of the rank-one product.
double rank_one_radius(const RankOneFactors& f);

/// Per-node infection derivative: dp_i = -gamma_i p_i + (1 - p_i) sum_j a_ij p_j.
std::vector<double> nimfa_rhs(std::span<const double> p, const DirectedWeightedGraph& g);

struct NimfaTrajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> states;
  double step = 0.0;
};

/// Explicit-Euler trajectory with [0,1] clamping.
NimfaTrajectory integrate_nimfa(std::span<const double> p0, const DirectedWeightedGraph& g,
                                double step, double horizon);

/// Runs the per-node dynamics on the degree-class graph and the
/// fixed-regime epidemic side by side with identical discretization;
/// returns the sup-norm deviation between the two trajectories.
double equivalence_check(int d_star, const ModelParams& params, const DegreeDistribution& dist,
                         std::span<const double> p0, double step, double horizon);

/// Edge-list CSV (i, j, weight), 1-based node ids, plus a recovery-rate
/// sidecar CSV (node, gamma).
void write_graph_csv(const std::string& edge_path, const std::string& recovery_path,
                     const DirectedWeightedGraph& g);
DirectedWeightedGraph read_graph_csv(const std::string& edge_path,
                                     const std::string& recovery_path);

}  // namespace epigame

#endif  // EPIGAME_NIMFA_HPP
