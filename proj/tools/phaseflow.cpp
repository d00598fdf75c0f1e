// phaseflow: batch front door for the graph phase-field dynamics library.
// Subcommands: graph (generators), evolve (scheme runs), experiment
// (convergence / gamma / cp1 / cp2 / pinning-map / mcf-agreement).
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "phaseflow/allencahn.hpp"
#include "phaseflow/comparison.hpp"
#include "phaseflow/io.hpp"
#include "phaseflow/mcf.hpp"
#include "phaseflow/rng.hpp"
#include "phaseflow/semidiscrete.hpp"
#include "phaseflow/timesplitting.hpp"

namespace pf = phaseflow;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "phaseflow 0.1.0";

struct GraphOptions {
  std::string file;
  std::string generator;
  int n = 0;
  double r = 0.0;
  double weight = 1.0;
  double inter = 0.1;
};

void add_graph_options(CLI::App* cmd, GraphOptions& opt) {
  cmd->add_option("--graph", opt.file, "edge-list file");
  cmd->add_option("--generator", opt.generator,
                  "path|cycle|complete|star|two-cluster");
  cmd->add_option("--n", opt.n, "generator size");
  cmd->add_option("--r", opt.r, "degree exponent in [0,1]")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--weight", opt.weight, "generator edge weight");
  cmd->add_option("--inter", opt.inter, "two-cluster inter weight");
}

pf::Graph build_graph(const GraphOptions& opt) {
  if (!opt.file.empty()) return pf::read_edge_list_file(opt.file, opt.r);
  if (opt.generator.empty())
    throw CLI::ValidationError("--graph or --generator is required");
  if (opt.generator == "path") return pf::make_path(opt.n, opt.r, opt.weight);
  if (opt.generator == "cycle") return pf::make_cycle(opt.n, opt.r, opt.weight);
  if (opt.generator == "complete") return pf::make_complete(opt.n, opt.r, opt.weight);
  if (opt.generator == "star") return pf::make_star(opt.n, opt.r, opt.weight);
  if (opt.generator == "two-cluster") return pf::make_two_cluster(opt.n, opt.inter, opt.r);
  throw CLI::ValidationError("unknown generator: " + opt.generator);
}

pf::VertexFunction parse_u0(const std::string& spec, const pf::Graph& g,
                            std::uint64_t seed) {
  if (spec == "random") {
    pf::Rng rng(seed);
    pf::VertexFunction u(g.size());
    for (int i = 0; i < g.size(); ++i) u[i] = rng.uniform();
    return u;
  }
  if (spec == "random-binary") {
    pf::Rng rng(seed);
    pf::VertexFunction u(g.size());
    for (int i = 0; i < g.size(); ++i) u[i] = rng.uniform() < 0.5 ? 0.0 : 1.0;
    return u;
  }
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    if (kind == "const") return pf::constant_vector(g, std::stod(arg));
    if (kind == "indicator") {
      std::vector<int> vertices;
      std::istringstream ss(arg);
      std::string tok;
      while (std::getline(ss, tok, ',')) vertices.push_back(std::stoi(tok));
      return pf::indicator(g, vertices);
    }
  }
  throw CLI::ValidationError("bad --u0 spec: " + spec +
                             " (use const:X | indicator:i,j | random | random-binary)");
}

std::string hash_hex(const pf::Graph& g) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(g.hash()));
  return buf;
}

json provenance(const pf::Graph& g, const std::string& scheme, double eps, double tau,
                std::uint64_t seed) {
  return {{"graph_hash", hash_hex(g)}, {"r", g.r()},       {"eps", eps},
          {"tau", tau},                {"scheme", scheme}, {"seed", seed},
          {"version", kVersion}};
}

void write_output(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot open output file: " + out);
    f << text;
  }
}

int default_jobs() {
  if (const char* env = std::getenv("PHASEFLOW_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0) return j;
  }
  return 1;
}

// Deterministic fan-out: result i lands in slot i regardless of scheduling.
template <typename Fn>
void parallel_for(int count, int jobs, Fn fn) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < count; i += jobs) fn(i);
    });
  for (auto& t : pool) t.join();
}

// ---------------------------------------------------------------------------

int run_graph(const GraphOptions& gopt, const std::string& out) {
  const pf::Graph g = build_graph(gopt);
  std::ostringstream os;
  write_edge_list(os, g);
  write_output(out, os.str());
  return 0;
}

struct EvolveOptions {
  GraphOptions graph;
  std::string scheme = "semidiscrete";
  double eps = 1.0;
  double tau = 0.1;
  double tau_ref = 0.0;
  double nu = 0.1;
  double dt = 0.0;
  double t_end = 0.0;
  int steps = 0;
  int samples = 101;
  double fp_tol = 0.0;
  std::string u0 = "random";
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
};

int run_evolve(const EvolveOptions& opt) {
  const pf::Graph g = build_graph(opt.graph);
  const pf::SpectralDecomposition dec(g);
  const pf::VertexFunction u0 = parse_u0(opt.u0, g, opt.seed);

  pf::Trajectory traj;
  double eps = opt.eps, tau = opt.tau;
  if (opt.scheme == "semidiscrete" || opt.scheme == "mbo") {
    if (opt.scheme == "mbo") eps = tau;  // lambda = 1
    if (opt.steps <= 0) throw CLI::ValidationError("--steps must be positive");
    traj = pf::sd_run(g, dec, pf::SchemeParams(eps, tau), u0, opt.steps, opt.fp_tol);
    if (opt.scheme == "mbo") traj.scheme_tag = "mbo";
  } else if (opt.scheme == "ac-reference") {
    if (opt.t_end <= 0.0) throw CLI::ValidationError("--t-end must be positive");
    std::vector<double> grid(opt.samples);
    for (int k = 0; k < opt.samples; ++k)
      grid[k] = opt.t_end * k / std::max(1, opt.samples - 1);
    traj = pf::ac_reference(g, dec, eps, u0, grid, opt.tau_ref);
    tau = opt.tau_ref > 0.0 ? opt.tau_ref : eps / 1024.0;
    for (const auto& state : traj.states)
      traj.energies.push_back(pf::energy_report(g, dec, eps, tau, state));
  } else if (opt.scheme == "timesplit") {
    if (opt.steps <= 0) throw CLI::ValidationError("--steps must be positive");
    const pf::SchemeParams params(eps, tau);
    traj.scheme_tag = "time-splitting";
    pf::VertexFunction u = u0;
    traj.times.push_back(0.0);
    traj.states.push_back(u);
    traj.energies.push_back(pf::energy_report(g, dec, eps, tau, u));
    for (int k = 1; k <= opt.steps; ++k) {
      u = pf::ts_step(g, dec, params, u);
      traj.times.push_back(k * tau);
      traj.states.push_back(u);
      traj.energies.push_back(pf::energy_report(g, dec, eps, tau, u));
    }
  } else if (opt.scheme == "regularized") {
    if (opt.t_end <= 0.0) throw CLI::ValidationError("--t-end must be positive");
    traj = pf::regularized_flow(g, dec, eps, opt.nu, u0, opt.t_end, opt.dt);
    tau = traj.size() > 1 ? traj.times[1] : 0.0;
  } else {
    throw CLI::ValidationError("unknown scheme: " + opt.scheme);
  }

  const json prov = provenance(g, traj.scheme_tag, eps, tau, opt.seed);
  if (opt.format == "json") {
    json doc;
    doc["provenance"] = prov;
    doc["trajectory"] = pf::trajectory_to_json(traj);
    write_output(opt.out, doc.dump(2) + "\n");
  } else if (opt.format == "csv") {
    std::ostringstream os;
    os << "# " << prov.dump() << "\n";
    pf::trajectory_to_csv(os, traj);
    write_output(opt.out, os.str());
  } else {
    throw CLI::ValidationError("unknown format: " + opt.format);
  }

  std::ostringstream summary;
  summary << "steps=" << traj.size() - 1
          << " fixed_point=" << (traj.reached_fixed_point ? "yes" : "no");
  if (!traj.energies.empty()) {
    const pf::EnergyReport& last = traj.energies.back();
    summary << " gl=" << pf::format_double(last.gl) << " h=" << pf::format_double(last.h)
            << " tv=" << pf::format_double(last.tv);
  }
  std::cerr << summary.str() << "\n";
  return 0;
}

struct ExperimentOptions {
  GraphOptions graph;
  double eps = 1.0;
  double t = 1.0;
  double t_end = 1.0;
  double tau_ref = 0.0;
  std::vector<double> taus;
  std::vector<double> eps_list;
  std::vector<double> lambdas;
  int grid = 20;
  int seeds = 100;
  int steps = 20;
  std::uint64_t seed = 0;
  std::string u0 = "random";
  int jobs = default_jobs();
  std::string out;
};

int run_experiment(const std::string& kind, const ExperimentOptions& opt) {
  std::ostringstream os;
  if (kind == "convergence") {
    const pf::Graph g = build_graph(opt.graph);
    const pf::SpectralDecomposition dec(g);
    if (opt.taus.empty()) throw CLI::ValidationError("--taus is required");
    const pf::VertexFunction u0 = parse_u0(opt.u0, g, opt.seed);
    const pf::ConvergenceTable table =
        pf::convergence_order_experiment(g, dec, opt.eps, u0, opt.t, opt.taus, opt.tau_ref);
    os << "tau,error\n";
    for (const auto& row : table.rows)
      os << pf::format_double(row.tau) << ',' << pf::format_double(row.error) << "\n";
    os << "# slope=" << pf::format_double(table.slope)
       << " monotone=" << (table.monotone ? 1 : 0)
       << " all_zero=" << (table.all_zero ? 1 : 0) << "\n";
  } else if (kind == "gamma") {
    const pf::Graph g = build_graph(opt.graph);
    if (opt.eps_list.empty()) throw CLI::ValidationError("--eps-list is required");
    const auto rows = pf::gamma_convergence_experiment(g, opt.eps_list, opt.grid);
    os << "eps,min_energy,minimizer_distance,scaled_h_bound_ok\n";
    for (const auto& row : rows)
      os << pf::format_double(row.eps) << ',' << pf::format_double(row.min_energy) << ','
         << pf::format_double(row.minimizer_distance) << ','
         << (row.scaled_h_bound_ok ? 1 : 0) << "\n";
  } else if (kind == "cp2" || kind == "cp1") {
    const pf::Graph g = build_graph(opt.graph);
    const pf::SpectralDecomposition dec(g);
    struct Row {
      bool pass = false;
      bool admissible = false;
    };
    std::vector<Row> rows(opt.seeds);
    parallel_for(opt.seeds, opt.jobs, [&](int k) {
      pf::Rng rng(opt.seed + 1000 * k + 17);
      pf::VertexFunction u0(g.size());
      for (int i = 0; i < g.size(); ++i) u0[i] = rng.uniform(0.15, 0.95);
      if (kind == "cp2") {
        pf::VertexFunction v0(g.size());
        for (int i = 0; i < g.size(); ++i)
          v0[i] = std::max(0.0, u0[i] - rng.uniform(0.0, 0.3));
        rows[k] = {pf::cp2_experiment(g, dec, opt.eps, u0, v0, opt.t_end, opt.tau_ref),
                   true};
      } else {
        const pf::VertexFunction w0 = u0.array() - rng.uniform(0.02, 0.1);
        const pf::Cp1Result res =
            pf::cp1_experiment(g, dec, opt.eps, u0, w0, opt.t_end, opt.seed + k, opt.tau_ref);
        rows[k] = {res.passed, res.admissible};
      }
    });
    os << "seed,admissible,pass\n";
    int discarded = 0;
    for (int k = 0; k < opt.seeds; ++k) {
      os << k << ',' << (rows[k].admissible ? 1 : 0) << ','
         << (rows[k].admissible && rows[k].pass ? 1 : 0) << "\n";
      discarded += rows[k].admissible ? 0 : 1;
    }
    os << "# discard_rate=" << pf::format_double(double(discarded) / opt.seeds) << "\n";
  } else if (kind == "pinning-map") {
    const pf::Graph g = build_graph(opt.graph);
    const pf::SpectralDecomposition dec(g);
    if (opt.lambdas.empty()) throw CLI::ValidationError("--lambdas is required");
    if (g.size() > 12) throw CLI::ValidationError("pinning-map caps |V| at 12");
    os << "lambda,set_mask,bound1,bound2,tau_empirical\n";
    for (double lambda : opt.lambdas) {
      for (unsigned mask = 1; mask + 1 < (1u << g.size()); ++mask) {
        std::vector<int> vertices;
        for (int i = 0; i < g.size(); ++i)
          if (mask & (1u << i)) vertices.push_back(i);
        const pf::PinningBounds b = pf::pinning_bounds(g, dec, vertices, lambda);
        // bisect for the empirical pinning threshold in tau
        const pf::VertexFunction chi = pf::indicator(g, vertices);
        auto pins = [&](double tau) {
          const auto params = pf::SchemeParams::from_lambda(tau, lambda);
          return (pf::sd_step(g, dec, params, chi).u - chi).cwiseAbs().maxCoeff() == 0.0;
        };
        double lo = 0.0, hi = 16.0;
        if (pins(hi)) {
          lo = hi;
        } else {
          for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            (pins(mid) ? lo : hi) = mid;
          }
        }
        os << pf::format_double(lambda) << ',' << mask << ','
           << pf::format_double(b.bound1) << ',' << pf::format_double(b.bound2) << ','
           << pf::format_double(lo) << "\n";
      }
    }
  } else if (kind == "mcf-agreement") {
    const pf::Graph g = build_graph(opt.graph);
    const pf::SpectralDecomposition dec(g);
    if (opt.taus.empty()) throw CLI::ValidationError("--taus is required");
    if (g.size() > 20) throw CLI::ValidationError("mcf-agreement caps |V| at 20");
    os << "tau,agreement_fraction\n";
    for (double tau : opt.taus) {
      pf::Rng rng(opt.seed);
      pf::VertexSet s(g.size());
      for (int i = 0; i < g.size(); ++i)
        if (rng.uniform() < 0.5) s.insert(i);
      int agree = 0;
      pf::VertexSet s_mbo = s, s_mcf = s;
      for (int k = 0; k < opt.steps; ++k) {
        s_mbo = pf::VertexSet::from_indicator(
            pf::mbo_step(g, dec, tau, s_mbo.to_indicator()));
        s_mcf = pf::new_mcf_step(g, dec, s_mcf, tau);
        agree += s_mbo == s_mcf;
      }
      os << pf::format_double(tau) << ','
         << pf::format_double(double(agree) / opt.steps) << "\n";
    }
  } else {
    throw CLI::ValidationError("unknown experiment: " + kind);
  }
  write_output(opt.out, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph phase-field dynamics: obstacle Allen-Cahn, MBO and friends"};
  app.require_subcommand(1);

  GraphOptions graph_opt;
  std::string graph_out;
  CLI::App* graph_cmd =
      app.add_subcommand("graph", "emit a generated graph as an edge list");
  add_graph_options(graph_cmd, graph_opt);
  graph_cmd->add_option("--out", graph_out, "output file (default stdout)");

  EvolveOptions ev;
  CLI::App* evolve_cmd = app.add_subcommand("evolve", "run a scheme and write a trajectory");
  add_graph_options(evolve_cmd, ev.graph);
  evolve_cmd->add_option("--scheme", ev.scheme,
                         "semidiscrete|mbo|ac-reference|timesplit|regularized");
  evolve_cmd->add_option("--eps", ev.eps, "interface parameter epsilon");
  evolve_cmd->add_option("--tau", ev.tau, "time step");
  evolve_cmd->add_option("--tau-ref", ev.tau_ref, "reference step (ac-reference)");
  evolve_cmd->add_option("--nu", ev.nu, "regularisation parameter (regularized)");
  evolve_cmd->add_option("--dt", ev.dt, "integrator step (regularized)");
  evolve_cmd->add_option("--t-end", ev.t_end, "final time (ac-reference/regularized)");
  evolve_cmd->add_option("--steps", ev.steps, "number of scheme steps");
  evolve_cmd->add_option("--samples", ev.samples, "sample count (ac-reference)");
  evolve_cmd->add_option("--fp-tol", ev.fp_tol, "fixed-point detection tolerance");
  evolve_cmd->add_option("--u0", ev.u0, "const:X | indicator:i,j | random | random-binary");
  evolve_cmd->add_option("--seed", ev.seed, "random seed");
  evolve_cmd->add_option("--out", ev.out, "output file (default stdout)");
  evolve_cmd->add_option("--format", ev.format, "json|csv");

  ExperimentOptions ex;
  std::string ex_kind;
  CLI::App* exp_cmd =
      app.add_subcommand("experiment", "run a verification experiment, emit CSV");
  exp_cmd->add_option("kind", ex_kind, "convergence|gamma|cp1|cp2|pinning-map|mcf-agreement")
      ->required();
  add_graph_options(exp_cmd, ex.graph);
  exp_cmd->add_option("--eps", ex.eps, "epsilon");
  exp_cmd->add_option("--t", ex.t, "comparison time (convergence)");
  exp_cmd->add_option("--t-end", ex.t_end, "horizon (cp1/cp2)");
  exp_cmd->add_option("--tau-ref", ex.tau_ref, "reference step");
  exp_cmd->add_option("--taus", ex.taus, "comma list of taus")->delimiter(',');
  exp_cmd->add_option("--eps-list", ex.eps_list, "comma list of eps")->delimiter(',');
  exp_cmd->add_option("--lambdas", ex.lambdas, "comma list of lambdas")->delimiter(',');
  exp_cmd->add_option("--grid", ex.grid, "grid resolution K (gamma)");
  exp_cmd->add_option("--seeds", ex.seeds, "number of seeded samples (cp1/cp2)");
  exp_cmd->add_option("--steps", ex.steps, "steps (mcf-agreement)");
  exp_cmd->add_option("--seed", ex.seed, "base seed");
  exp_cmd->add_option("--u0", ex.u0, "initial state spec (convergence)");
  exp_cmd->add_option("--jobs", ex.jobs, "worker pool size (default $PHASEFLOW_JOBS)");
  exp_cmd->add_option("--out", ex.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
    if (graph_cmd->parsed()) return run_graph(graph_opt, graph_out);
    if (evolve_cmd->parsed()) return run_evolve(ev);
    if (exp_cmd->parsed()) return run_experiment(ex_kind, ex);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
