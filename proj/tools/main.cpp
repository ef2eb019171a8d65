// Command-line frontend: DC power flow, attack simulation, detection, the
// experiment sweep, property verification, case conversion and synthesis.
//
// Exit codes: 0 ok, 1 input error, 2 internal numerical failure,
// 3 verification failure.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "reactgrid/attack.hpp"
#include "reactgrid/detection.hpp"
#include "reactgrid/experiment.hpp"
#include "reactgrid/json_io.hpp"
#include "reactgrid/matpower.hpp"
#include "reactgrid/power_flow.hpp"
#include "reactgrid/synth.hpp"
#include "reactgrid/verify.hpp"

namespace rg = reactgrid;

namespace {

void write_or_print(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    rg::write_text_file(out_path, content);
  }
}

int run_powerflow(const std::string& grid_path, const std::string& out_path) {
  const rg::Grid grid = rg::load_grid(grid_path);
  const rg::VecX theta = rg::solve_dc_power_flow(grid, grid.injections());
  const rg::VecX flows = rg::line_flows(grid, theta);
  std::string csv = "type,id,value\n";
  char buf[96];
  for (int i = 0; i < grid.node_count(); ++i) {
    std::snprintf(buf, sizeof(buf), "theta,%d,%.12g\n", grid.node_id(i), theta[i]);
    csv += buf;
  }
  for (int e = 0; e < grid.edge_count(); ++e) {
    std::snprintf(buf, sizeof(buf), "flow,%d,%.12g\n", grid.edge_id(e), flows[e]);
    csv += buf;
  }
  write_or_print(out_path, csv);
  return 0;
}

int run_attack(const std::string& grid_path, const std::string& scenario_path,
               const std::string& obs_path, const std::string& truth_path) {
  const rg::Grid grid = rg::load_grid(grid_path);
  const rg::AttackScenario scenario = rg::load_scenario(scenario_path, grid);
  const rg::VecX theta = rg::solve_dc_power_flow(grid, grid.injections());
  const auto [obs, truth] = rg::simulate_attack(grid, theta, scenario);
  write_or_print(obs_path, rg::observation_to_json_text(obs, grid));
  if (!truth_path.empty()) rg::save_ground_truth(truth, grid, truth_path);
  return 0;
}

int run_detect(const std::string& grid_path, const std::string& obs_path, int t,
               std::uint64_t seed, const std::string& out_path) {
  const rg::Grid grid = rg::load_grid(grid_path);
  const rg::Observation obs = rg::load_observation(obs_path, grid);
  rg::Rng rng(seed);
  const rg::ReactOutcome outcome = rg::react(grid, obs.theta_pre, obs.theta_obs, t, rng);
  write_or_print(out_path, rg::outcome_to_json_text(outcome, grid));
  return 0;
}

int run_experiment_cmd(const std::string& config_path, const std::string& grid_override, int t,
                       std::int64_t seed, int jobs, const std::string& out_path) {
  rg::ExperimentConfig config = rg::load_config(config_path);
  if (!grid_override.empty()) config.grid_path = grid_override;
  if (config.grid_path.empty()) throw rg::InvalidInput("experiment: no grid file given");
  if (t >= 0) config.t = t;
  if (seed >= 0) config.seed = static_cast<std::uint64_t>(seed);
  if (jobs > 0) config.jobs = jobs;
  const rg::Grid grid = rg::load_grid(config.grid_path);
  const rg::ExperimentResult result = rg::run_experiment(grid, config);
  write_or_print(out_path, rg::metrics_csv(result.rows));
  std::cerr << rg::cells_table(result.cells);
  return 0;
}

int run_verify(int lemma, int m, int trials, std::uint64_t seed) {
  rg::Rng rng(seed);
  std::vector<rg::CheckResult> results;
  const auto append = [&](std::vector<rg::CheckResult> r) {
    results.insert(results.end(), r.begin(), r.end());
  };
  // Lemma filter: 16 selects the weight-probability statistics, 18 the cycle
  // detectability suite; 0 runs everything.
  if (lemma == 0) {
    append(rg::verify_flow_laws(trials > 0 ? trials : 50, rng));
    append(rg::verify_containment(trials > 0 ? trials : 50, rng));
    append(rg::verify_weight_probability(2, m > 0 ? m : 10, 20000, rng));
    append(rg::verify_cycle_detection(trials > 0 ? trials : 30, rng));
  } else if (lemma == 16) {
    const int mm = m > 0 ? m : 10;
    append(rg::verify_weight_probability(m > 0 ? mm : 2, mm, trials > 0 ? trials : 100000, rng));
  } else if (lemma == 18) {
    append(rg::verify_cycle_detection(trials > 0 ? trials : 50, rng));
  } else {
    throw rg::InvalidInput("verify: unknown --lemma (use 16 or 18, or omit for all)");
  }
  bool ok = true;
  for (const rg::CheckResult& r : results) {
    std::printf("[%s] %s: %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
    ok = ok && r.pass;
  }
  return ok ? 0 : 3;
}

int run_convert(const std::string& matpower_path, const std::string& out_path) {
  const rg::Grid grid = rg::load_matpower(matpower_path);
  write_or_print(out_path, rg::grid_to_json_text(grid));
  return 0;
}

int run_synth(std::uint64_t seed, const std::string& out_path, const std::string& area_path) {
  const rg::PlantedCase pc = rg::desk_case(seed);
  write_or_print(out_path, rg::grid_to_json_text(pc.grid));
  if (!area_path.empty()) {
    std::string txt = "{\"area\":[";
    const auto ids = pc.grid.node_indices_to_ids(pc.area);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      txt += (i ? "," : "") + std::to_string(ids[i]);
    }
    txt += "]}\n";
    rg::write_text_file(area_path, txt);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DC power flow attack simulation and line-failure detection"};
  app.require_subcommand(1);

  std::string grid_path, scenario_path, obs_path, truth_path, config_path, out_path, area_path;
  std::string matpower_path;
  int t = -1;
  std::int64_t seed = -1;
  int jobs = 0;
  int lemma = 0;
  int m = 0;
  int trials = 0;

  auto* powerflow = app.add_subcommand("powerflow", "solve angles and line flows");
  powerflow->add_option("--grid", grid_path, "grid JSON")->required();
  powerflow->add_option("--out", out_path, "output CSV (default stdout)");

  auto* attack = app.add_subcommand("attack", "simulate an attack scenario");
  attack->add_option("--grid", grid_path, "grid JSON")->required();
  attack->add_option("--scenario", scenario_path, "scenario JSON")->required();
  attack->add_option("--out", obs_path, "observation JSON output (default stdout)");
  attack->add_option("--truth-out", truth_path, "ground truth JSON output");

  auto* detect = app.add_subcommand("detect", "detect the attacked area and line failures");
  detect->add_option("--grid", grid_path, "grid JSON")->required();
  detect->add_option("--obs", obs_path, "observation JSON")->required();
  detect->add_option("--T", t, "weighted detection iterations (default 20)");
  detect->add_option("--seed", seed, "detector seed");
  detect->add_option("--out", out_path, "outcome JSON output (default stdout)");

  auto* experiment = app.add_subcommand("experiment", "run a scenario sweep");
  experiment->add_option("--config", config_path, "experiment config JSON")->required();
  experiment->add_option("--grid", grid_path, "grid JSON (overrides config)");
  experiment->add_option("--T", t, "override T");
  experiment->add_option("--seed", seed, "override master seed");
  experiment->add_option("--jobs", jobs, "worker threads");
  experiment->add_option("--out", out_path, "metrics CSV output (default stdout)");

  auto* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("--lemma", lemma, "restrict to one suite (16 or 18)");
  verify->add_option("--m", m, "weight-count bound for the statistics suite");
  verify->add_option("--trials", trials, "trials per property");
  verify->add_option("--seed", seed, "suite seed");

  auto* convert = app.add_subcommand("convert", "convert a MATPOWER-style case to grid JSON");
  convert->add_option("--matpower", matpower_path, "case .m file")->required();
  convert->add_option("--out", out_path, "grid JSON output (default stdout)");

  auto* synth = app.add_subcommand("synth", "generate the bundled study case");
  synth->add_option("--seed", seed, "generator seed");
  synth->add_option("--out", out_path, "grid JSON output (default stdout)");
  synth->add_option("--area-out", area_path, "study area JSON output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (powerflow->parsed()) return run_powerflow(grid_path, out_path);
    if (attack->parsed()) return run_attack(grid_path, scenario_path, obs_path, truth_path);
    if (detect->parsed())
      return run_detect(grid_path, obs_path, t >= 0 ? t : 20,
                        seed >= 0 ? static_cast<std::uint64_t>(seed) : 0, out_path);
    if (experiment->parsed())
      return run_experiment_cmd(config_path, grid_path, t, seed, jobs, out_path);
    if (verify->parsed())
      return run_verify(lemma, m, trials, seed >= 0 ? static_cast<std::uint64_t>(seed) : 20260101);
    if (convert->parsed()) return run_convert(matpower_path, out_path);
    if (synth->parsed())
      return run_synth(seed >= 0 ? static_cast<std::uint64_t>(seed) : 7, out_path, area_path);
  } catch (const rg::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const rg::MalformedInstance& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const rg::Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
