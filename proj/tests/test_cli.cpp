// End-to-end checks of the phaseflow CLI: flag handling, exit codes, output
// determinism and the documented formats. The binary path arrives in the
// PHASEFLOW_CLI environment variable.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

int failures = 0;

#define EXPECT(cond, msg)                                                    \
  do {                                                                       \
    if (!(cond)) {                                                           \
      std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << (msg) \
                << "\n";                                                     \
      ++failures;                                                            \
    }                                                                        \
  } while (0)

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run(const std::string& cli, const std::string& args) {
  const std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

int main() {
  const char* cli_env = std::getenv("PHASEFLOW_CLI");
  if (!cli_env) {
    std::cerr << "PHASEFLOW_CLI not set\n";
    return 1;
  }
  const std::string cli = cli_env;

  // graph generator output format
  {
    const RunResult res = run(cli, "graph --generator cycle --n 4");
    EXPECT(res.exit_code == 0, "cycle generator exits 0");
    int lines = 0;
    std::istringstream ss(res.stdout_text);
    std::string line;
    while (std::getline(ss, line)) ++lines;
    EXPECT(lines == 4, "cycle C4 has 4 edge lines");
    EXPECT(res.stdout_text.find("0 1 1\n") != std::string::npos, "unit weight edges");
  }
  {
    const RunResult res = run(cli, "graph --generator complete --n 5 --weight 2");
    int lines = 0;
    std::istringstream ss(res.stdout_text);
    std::string line;
    while (std::getline(ss, line)) ++lines;
    EXPECT(lines == 10, "K5 has 10 edges");
  }
  {
    const RunResult res = run(cli, "graph --generator two-cluster --n 8 --inter 0.05");
    EXPECT(res.exit_code == 0, "two-cluster generator exits 0");
    EXPECT(res.stdout_text.find("0.05") != std::string::npos, "inter weight appears");
  }

  // determinism: same flags and seed give byte-identical output
  {
    const std::string args =
        "evolve --generator cycle --n 6 --scheme semidiscrete --eps 1 --tau 0.5 "
        "--steps 40 --u0 random --seed 7";
    const RunResult a = run(cli, args);
    const RunResult b = run(cli, args);
    EXPECT(a.exit_code == 0, "semidiscrete run exits 0");
    EXPECT(a.stdout_text == b.stdout_text, "identical flags+seed are byte-identical");
    EXPECT(!a.stdout_text.empty(), "trajectory JSON not empty");

    const auto doc = nlohmann::json::parse(a.stdout_text);
    EXPECT(doc.contains("provenance"), "provenance embedded");
    for (const char* key :
         {"graph_hash", "r", "eps", "tau", "scheme", "seed", "version"})
      EXPECT(doc["provenance"].contains(key), std::string("provenance key ") + key);
    EXPECT(doc["trajectory"]["steps"].size() >= 2 &&
               doc["trajectory"]["steps"].size() <= 41,
           "at most 41 samples for 40 steps (early stop at fixed points)");
    for (const auto& step : doc["trajectory"]["steps"]) {
      for (const char* key : {"n", "t", "u", "beta", "gl", "h", "j", "tv", "dirichlet"})
        EXPECT(step.contains(key), std::string("step key ") + key);
      // lambda = 0.5 branch keeps iterates inside the box
      for (const auto& x : step["u"]) {
        EXPECT(x.get<double>() >= 0.0, "iterate >= 0");
        EXPECT(x.get<double>() <= 1.0, "iterate <= 1");
      }
    }
  }

  // MBO pinning run per the star bound: tau below lambda/(2 ||Lap chi||) pins
  {
    const RunResult res = run(cli,
                              "evolve --generator star --n 4 --r 0 --scheme mbo "
                              "--eps 0.1 --tau 0.1 --steps 50 --u0 indicator:0");
    EXPECT(res.exit_code == 0, "mbo run exits 0");
    const auto doc = nlohmann::json::parse(res.stdout_text);
    const auto& steps = doc["trajectory"]["steps"];
    EXPECT(doc["trajectory"]["reached_fixed_point"].get<bool>(), "mbo reaches a fixed point");
    // tau = 0.1 <= 1/6: the centre indicator is pinned
    EXPECT(steps.front()["u"] == steps.back()["u"], "indicator pinned under the bound");
  }

  // freeze example: constant 0.25 on a path hits the obstacle at -eps log(1-2a)
  {
    const RunResult res = run(cli,
                              "evolve --generator path --n 2 --scheme ac-reference "
                              "--eps 1 --t-end 2 --u0 const:0.25 --samples 401");
    EXPECT(res.exit_code == 0, "ac-reference run exits 0");
    const auto doc = nlohmann::json::parse(res.stdout_text);
    double hit = -1.0;
    for (const auto& step : doc["trajectory"]["steps"]) {
      if (step["u"][0].get<double>() == 0.0 && step["u"][1].get<double>() == 0.0) {
        hit = step["t"].get<double>();
        break;
      }
    }
    EXPECT(hit > 0.0, "freeze detected");
    EXPECT(std::abs(hit - 0.69314718055994531) < 0.01, "freeze near eps log 2");
  }

  // trajectory CSV format
  {
    const RunResult res = run(cli,
                              "evolve --generator path --n 3 --scheme semidiscrete "
                              "--eps 1 --tau 0.2 --steps 3 --u0 const:0.5 --format csv");
    EXPECT(res.exit_code == 0, "csv run exits 0");
    EXPECT(res.stdout_text.find("n,time,vertex,u,beta,gl,h,j,tv,dirichlet") !=
               std::string::npos,
           "csv header");
  }

  // experiment: convergence slope report
  {
    const RunResult res = run(cli,
                              "experiment convergence --generator cycle --n 6 --eps 1 "
                              "--t 1 --taus 0.2,0.1,0.05,0.025 --u0 const:0.4");
    EXPECT(res.exit_code == 0, "convergence experiment exits 0");
    EXPECT(res.stdout_text.find("tau,error") != std::string::npos, "convergence header");
    EXPECT(res.stdout_text.find("# slope=") != std::string::npos, "slope report");
  }

  // experiment: gamma table
  {
    const RunResult res = run(cli,
                              "experiment gamma --generator path --n 3 "
                              "--eps-list 1,0.5,0.25,0.125 --grid 20");
    EXPECT(res.exit_code == 0, "gamma experiment exits 0");
    EXPECT(res.stdout_text.find("eps,min_energy,minimizer_distance") != std::string::npos,
           "gamma header");
  }

  // experiment: cp2 with a seed sweep and deterministic parallel fan-out
  {
    const RunResult seq =
        run(cli, "experiment cp2 --generator cycle --n 5 --eps 1 --t-end 0.5 "
                 "--seeds 8 --jobs 1");
    const RunResult par =
        run(cli, "experiment cp2 --generator cycle --n 5 --eps 1 --t-end 0.5 "
                 "--seeds 8 --jobs 4");
    EXPECT(seq.exit_code == 0, "cp2 experiment exits 0");
    EXPECT(seq.stdout_text == par.stdout_text, "jobs do not change the output");
    EXPECT(seq.stdout_text.find("# discard_rate=") != std::string::npos, "discard rate");
  }

  // experiment: pinning map emits the bound columns
  {
    const RunResult res =
        run(cli, "experiment pinning-map --generator star --n 4 --lambdas 0.25,0.5");
    EXPECT(res.exit_code == 0, "pinning map exits 0");
    EXPECT(res.stdout_text.find("lambda,set_mask,bound1,bound2,tau_empirical") !=
               std::string::npos,
           "pinning map header");
  }

  // experiment: mcf agreement fractions
  {
    const RunResult res = run(cli,
                              "experiment mcf-agreement --generator path --n 6 "
                              "--taus 0.05,0.2 --steps 10 --seed 3");
    EXPECT(res.exit_code == 0, "mcf agreement exits 0");
    EXPECT(res.stdout_text.find("tau,agreement_fraction") != std::string::npos,
           "agreement header");
  }

  // error handling: bad flags exit 2
  {
    EXPECT(run(cli, "evolve --scheme nonsense --generator path --n 3 --steps 3")
               .exit_code == 2,
           "unknown scheme exits 2");
    EXPECT(run(cli, "evolve --generator path --n 3 --scheme semidiscrete --eps 0.5 "
                    "--tau 1 --steps 3")
               .exit_code == 2,
           "lambda > 1 for the semi-discrete scheme exits 2");
    EXPECT(run(cli, "graph --generator heptagram --n 7").exit_code == 2,
           "unknown generator exits 2");
    EXPECT(run(cli, "graph").exit_code == 2, "missing generator exits 2");
    EXPECT(run(cli, "evolve --graph /nonexistent.tsv --scheme mbo --tau 0.1 --steps 1")
               .exit_code == 3,
           "unreadable graph file exits 3");
  }

  if (failures == 0) std::cout << "cli tests passed\n";
  return failures == 0 ? 0 : 1;
}
