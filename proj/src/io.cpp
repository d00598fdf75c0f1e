#include "phaseflow/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace phaseflow {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

nlohmann::json number_or_inf(double x) {
  if (std::isfinite(x)) return x;
  return x > 0 ? "inf" : "-inf";
}

}  // namespace

nlohmann::json energy_to_json(const EnergyReport& rep) {
  return {{"gl", number_or_inf(rep.gl)},
          {"h", rep.h},
          {"j", rep.j},
          {"tv", rep.tv},
          {"dirichlet", rep.dirichlet}};
}

nlohmann::json trajectory_to_json(const Trajectory& traj) {
  nlohmann::json out;
  out["scheme"] = traj.scheme_tag;
  nlohmann::json steps = nlohmann::json::array();
  for (int k = 0; k < traj.size(); ++k) {
    nlohmann::json step;
    step["n"] = k;
    step["t"] = traj.times[k];
    step["u"] = std::vector<double>(traj.states[k].begin(), traj.states[k].end());
    if (!traj.betas.empty())
      step["beta"] = std::vector<double>(traj.betas[k].begin(), traj.betas[k].end());
    if (!traj.energies.empty()) {
      const nlohmann::json energy = energy_to_json(traj.energies[k]);
      step.update(energy);
    }
    steps.push_back(std::move(step));
  }
  out["steps"] = std::move(steps);
  out["reached_fixed_point"] = traj.reached_fixed_point;
  if (traj.reached_fixed_point) out["fixed_point_step"] = traj.fixed_point_step;
  return out;
}

void trajectory_to_csv(std::ostream& out, const Trajectory& traj) {
  const bool has_beta = !traj.betas.empty();
  const bool has_energy = !traj.energies.empty();
  out << "n,time,vertex,u";
  if (has_beta) out << ",beta";
  if (has_energy) out << ",gl,h,j,tv,dirichlet";
  out << "\n";
  for (int k = 0; k < traj.size(); ++k) {
    for (int i = 0; i < traj.states[k].size(); ++i) {
      out << k << ',' << format_double(traj.times[k]) << ',' << i << ','
          << format_double(traj.states[k][i]);
      if (has_beta) out << ',' << format_double(traj.betas[k][i]);
      if (has_energy) {
        const EnergyReport& rep = traj.energies[k];
        out << ',' << format_double(rep.gl) << ',' << format_double(rep.h) << ','
            << format_double(rep.j) << ',' << format_double(rep.tv) << ','
            << format_double(rep.dirichlet);
      }
      out << "\n";
    }
  }
}

}  // namespace phaseflow
