// JSON and CSV emission for trajectories and energy reports. Doubles go
// through 17-significant-digit formatting so files round-trip losslessly.
#ifndef PHASEFLOW_IO_HPP
#define PHASEFLOW_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "phaseflow/functionals.hpp"
#include "phaseflow/trajectory.hpp"

namespace phaseflow {

// Non-finite energies (GL off the box) serialise as the string "inf".
nlohmann::json energy_to_json(const EnergyReport& rep);

nlohmann::json trajectory_to_json(const Trajectory& traj);

// One row per (step, vertex): n,time,vertex,u,beta plus the energy columns.
void trajectory_to_csv(std::ostream& out, const Trajectory& traj);

// Lossless round-trip double formatting.
std::string format_double(double x);

}  // namespace phaseflow

#endif  // PHASEFLOW_IO_HPP
