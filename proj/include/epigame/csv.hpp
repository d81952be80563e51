#ifndef EPIGAME_CSV_HPP
#define EPIGAME_CSV_HPP

#include <string>

#include "epigame/dynamics.hpp"

namespace epigame {

/// Writes a trajectory as CSV with header
/// t,y_1..y_dmax,zS_1..zS_dmax,zI_1..zI_dmax,theta,y_avg[,regime].
/// The regime column is present when the trajectory carries regime codes
/// (switched runs): d_star off the surfaces, -d' while sliding on
/// theta_th^{d'}. Values use 10 significant digits and '.' decimals.
void write_trajectory_csv(const std::string& path, const Trajectory& traj,
                          const DegreeDistribution& dist);

}  // namespace epigame

#endif  // EPIGAME_CSV_HPP
