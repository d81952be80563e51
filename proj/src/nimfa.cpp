#include "epigame/nimfa.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "csv_detail.hpp"
#include "epigame/reduced.hpp"

namespace epigame {

namespace {

std::vector<int> reachable(const DirectedWeightedGraph& g, bool forward) {
  // forward: follow transmission edges j -> i (a_ij > 0)
  std::vector<int> seen(g.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < g.n; ++v) {
      const double w = forward ? g.at(v, u) : g.at(u, v);
      if (w > 0.0 && !seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace

bool DirectedWeightedGraph::strongly_connected() const {
  if (n == 0) return false;
  for (bool forward : {true, false}) {
    const auto seen = reachable(*this, forward);
    if (std::count(seen.begin(), seen.end(), 1) != n) return false;
  }
  return true;
}

AbarGraph build_abar(int d_star, const ModelParams& params, const DegreeDistribution& dist) {
  if (d_star < 1 || d_star > dist.d_max() + 1)
    throw std::invalid_argument("build_abar: d_star must lie in 1..d_max+1");
  const int n = dist.d_max();
  AbarGraph out;
  out.graph.n = n;
  out.graph.adjacency.assign(static_cast<std::size_t>(n) * n, 0.0);
  out.graph.recovery.assign(n, params.gamma);
  out.factors.v1.resize(n);
  out.factors.v2.resize(n);
  for (int i = 0; i < n; ++i) {
    const double d = i + 1;
    const double scale = (i + 1 < d_star) ? d : params.alpha * d;
    out.factors.v1[i] = scale / (dist.d_avg * params.gamma);
    out.factors.v2[i] = d * dist.masses[i] * params.beta_P[i];
  }
  for (int i = 0; i < n; ++i) {
    const double d = i + 1;
    const double scale = (i + 1 < d_star) ? d : params.alpha * d;
    for (int j = 0; j < n; ++j) {
      const double dp = j + 1;
      out.graph.at(i, j) = scale / dist.d_avg * (dp * dist.masses[j] * params.beta_P[j]);
    }
  }
  return out;
}

double spectral_radius(const DirectedWeightedGraph& g) {
  const int n = g.n;
  if (n == 0) return 0.0;
  for (double r : g.recovery)
    if (!(r > 0.0)) throw std::invalid_argument("spectral_radius: recovery rates must be positive");

  std::vector<double> x(n, 1.0 / n), mx(n, 0.0);
  constexpr int kMaxIters = 100000;
  constexpr double kRelTol = 1e-10;
  for (int iter = 0; iter < kMaxIters; ++iter) {
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += g.at(i, j) * x[j];
      mx[i] = s / g.recovery[i];
      norm += mx[i];
    }
    if (norm == 0.0) return 0.0;  // iterate annihilated: radius 0 along positive cone

    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (int i = 0; i < n; ++i) {
      if (x[i] <= 0.0) continue;
      const double ratio = mx[i] / x[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    if (hi - lo <= kRelTol * std::max(hi, 1e-300)) return 0.5 * (lo + hi);
    for (int i = 0; i < n; ++i) x[i] = mx[i] / norm;
  }
  throw std::runtime_error("spectral_radius: power iteration did not converge within 100000 "
                           "iterations");
}

double rank_one_radius(const RankOneFactors& f) {
  if (f.v1.size() != f.v2.size())
    throw std::invalid_argument("rank_one_radius: factor lengths differ");
  double sum = 0.0;
  for (std::size_t i = 0; i < f.v1.size(); ++i) sum += f.v1[i] * f.v2[i];
  return sum;
}

std::vector<double> nimfa_rhs(std::span<const double> p, const DirectedWeightedGraph& g) {
  if (static_cast<int>(p.size()) != g.n)
    throw std::invalid_argument("nimfa_rhs: state length does not match node count");
  std::vector<double> dp(g.n);
  for (int i = 0; i < g.n; ++i) {
    double pressure = 0.0;
    for (int j = 0; j < g.n; ++j) pressure += g.at(i, j) * p[j];
    dp[i] = -g.recovery[i] * p[i] + (1.0 - p[i]) * pressure;
  }
  return dp;
}

NimfaTrajectory integrate_nimfa(std::span<const double> p0, const DirectedWeightedGraph& g,
                                double step, double horizon) {
  if (static_cast<int>(p0.size()) != g.n)
    throw std::invalid_argument("integrate_nimfa: state length does not match node count");
  if (!(step > 0.0) || !(horizon >= step))
    throw std::invalid_argument("integrate_nimfa: bad step or horizon");

  NimfaTrajectory traj;
  traj.step = step;
  std::vector<double> p(p0.begin(), p0.end());
  const auto total = static_cast<std::size_t>(std::ceil(horizon / step - 1e-9));
  traj.times.reserve(total + 1);
  traj.states.reserve(total + 1);
  traj.times.push_back(0.0);
  traj.states.push_back(p);
  for (std::size_t nstep = 1; nstep <= total; ++nstep) {
    const auto dp = nimfa_rhs(p, g);
    for (int i = 0; i < g.n; ++i) {
      double v = p[i] + step * dp[i];
      p[i] = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
    }
    for (int i = 0; i < g.n; ++i)
      if (!std::isfinite(p[i]))
        throw std::runtime_error("integrate_nimfa: non-finite state at step " +
                                 std::to_string(nstep));
    traj.times.push_back(static_cast<double>(nstep) * step);
    traj.states.push_back(p);
  }
  return traj;
}

double equivalence_check(int d_star, const ModelParams& params, const DegreeDistribution& dist,
                         std::span<const double> p0, double step, double horizon) {
  if (p0.size() != dist.size())
    throw std::invalid_argument("equivalence_check: p0 length does not match degree set");
  const auto abar = build_abar(d_star, params, dist);
  const auto node_traj = integrate_nimfa(p0, abar.graph, step, horizon);

  IntegrateOptions opts;
  opts.step = step;
  opts.horizon = horizon;
  opts.stop_at_convergence = false;
  opts.record_stride = 1;
  const auto regime_traj = integrate_regime(p0, d_star, params, dist, opts);

  if (node_traj.states.size() != regime_traj.states.size())
    throw std::logic_error("equivalence_check: trajectory lengths differ");
  double dev = 0.0;
  for (std::size_t k = 0; k < node_traj.states.size(); ++k)
    for (std::size_t i = 0; i < dist.size(); ++i)
      dev = std::max(dev, std::abs(node_traj.states[k][i] - regime_traj.states[k].y[i]));
  return dev;
}

void write_graph_csv(const std::string& edge_path, const std::string& recovery_path,
                     const DirectedWeightedGraph& g) {
  std::ofstream edges(edge_path);
  if (!edges) throw std::runtime_error("cannot open " + edge_path + " for writing");
  edges << "i,j,weight\n";
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (g.at(i, j) != 0.0)
        edges << (i + 1) << ',' << (j + 1) << ',' << detail::format_value(g.at(i, j)) << '\n';

  std::ofstream rec(recovery_path);
  if (!rec) throw std::runtime_error("cannot open " + recovery_path + " for writing");
  rec << "node,gamma\n";
  for (int i = 0; i < g.n; ++i)
    rec << (i + 1) << ',' << detail::format_value(g.recovery[i]) << '\n';
}

DirectedWeightedGraph read_graph_csv(const std::string& edge_path,
                                     const std::string& recovery_path) {
  struct Edge {
    int i, j;
    double w;
  };
  std::vector<Edge> parsed;
  int n = 0;

  std::ifstream edges(edge_path);
  if (!edges) throw std::runtime_error("cannot open " + edge_path);
  std::string line;
  std::getline(edges, line);  // header
  while (std::getline(edges, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    Edge e{};
    char comma;
    if (!(row >> e.i >> comma >> e.j >> comma >> e.w))
      throw std::runtime_error("malformed edge row: " + line);
    if (e.i < 1 || e.j < 1) throw std::runtime_error("edge node ids must be 1-based");
    if (!(e.w >= 0.0)) throw std::runtime_error("edge weights must be non-negative");
    n = std::max({n, e.i, e.j});
    parsed.push_back(e);
  }

  DirectedWeightedGraph g;
  std::ifstream rec(recovery_path);
  if (!rec) throw std::runtime_error("cannot open " + recovery_path);
  std::getline(rec, line);  // header
  std::vector<std::pair<int, double>> rates;
  while (std::getline(rec, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    int node;
    double gamma;
    char comma;
    if (!(row >> node >> comma >> gamma))
      throw std::runtime_error("malformed recovery row: " + line);
    n = std::max(n, node);
    rates.emplace_back(node, gamma);
  }

  g.n = n;
  g.adjacency.assign(static_cast<std::size_t>(n) * n, 0.0);
  g.recovery.assign(n, 0.0);
  for (const auto& e : parsed) g.at(e.i - 1, e.j - 1) = e.w;
  for (const auto& [node, gamma] : rates) g.recovery[node - 1] = gamma;
  for (double r : g.recovery)
    if (!(r > 0.0))
      throw std::runtime_error("recovery sidecar must cover every node with a positive rate");
  return g;
}

}  // namespace epigame
