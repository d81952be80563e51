#include "epigame/csv.hpp"

#include <fstream>
#include <stdexcept>

#include "csv_detail.hpp"

namespace epigame {

void write_trajectory_csv(const std::string& path, const Trajectory& traj,
                          const DegreeDistribution& dist) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");

  const bool with_regime = !traj.regime_series.empty();
  out << 't';
  for (int d : dist.degrees) out << ",y_" << d;
  for (int d : dist.degrees) out << ",zS_" << d;
  for (int d : dist.degrees) out << ",zI_" << d;
  out << ",theta,y_avg";
  if (with_regime) out << ",regime";
  out << '\n';

  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    out << detail::format_value(traj.times[k]);
    const SocialState& s = traj.states[k];
    for (double v : s.y) out << ',' << detail::format_value(v);
    for (double v : s.z_S) out << ',' << detail::format_value(v);
    for (double v : s.z_I) out << ',' << detail::format_value(v);
    out << ',' << detail::format_value(traj.theta_series[k]);
    out << ',' << detail::format_value(traj.y_avg_series[k]);
    if (with_regime) out << ',' << traj.regime_series[k];
    out << '\n';
  }
}

}  // namespace epigame
