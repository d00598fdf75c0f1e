// Time-stamped state sequences shared by the schemes: states u(t), obstacle
// reactions beta(t) and optional per-sample energy diagnostics.
#ifndef PHASEFLOW_TRAJECTORY_HPP
#define PHASEFLOW_TRAJECTORY_HPP

#include <string>
#include <vector>

#include "phaseflow/functionals.hpp"
#include "phaseflow/graph.hpp"

namespace phaseflow {

struct Trajectory {
  std::vector<double> times;            // strictly increasing
  std::vector<VertexFunction> states;   // u at each time
  std::vector<VertexFunction> betas;    // beta at each time (a.e. representative)
  std::vector<EnergyReport> energies;   // empty, or one per sample
  std::string scheme_tag;
  bool reached_fixed_point = false;
  int fixed_point_step = -1;

  int size() const { return static_cast<int>(times.size()); }
  const VertexFunction& state(int k) const { return states[k]; }
  const VertexFunction& beta(int k) const { return betas[k]; }
};

}  // namespace phaseflow

#endif  // PHASEFLOW_TRAJECTORY_HPP
