#include "reactgrid/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <thread>

#include <json.hpp>

#include "reactgrid/json_io.hpp"
#include "reactgrid/power_flow.hpp"
#include "reactgrid/topology.hpp"

namespace reactgrid {

ScenarioMetrics score_scenario(const Grid& grid, const GroundTruth& truth, const Observation& obs,
                               const ReactOutcome& outcome) {
  ScenarioMetrics m;
  m.kind = truth.scenario.kind;
  m.k = static_cast<int>(truth.scenario.failures.size());

  const IndexSet& f_true = truth.scenario.failures;
  const IndexSet& f_found = outcome.result.failed_edges;
  m.fn = static_cast<int>(set_minus(f_true, f_found).size());
  m.fp = static_cast<int>(set_minus(f_found, f_true).size());
  m.exact = m.fn == 0 && m.fp == 0;
  m.extra_nodes = static_cast<int>(set_minus(outcome.detected_h, truth.scenario.h).size());
  m.confidence = outcome.result.confidence;

  // Recovered angles: detector output over its working area, the observed
  // values elsewhere. Error is relative L2 over the true attacked nodes.
  VecX recovered = obs.theta_obs;
  for (std::size_t i = 0; i < outcome.result.area.size(); ++i)
    recovered[outcome.result.area[i]] = outcome.result.theta_recovered[static_cast<Eigen::Index>(i)];
  const VecX rec_h = subvector(recovered, truth.scenario.h);
  const VecX true_h = subvector(truth.theta_post, truth.scenario.h);
  if (truth.scenario.h.empty()) {
    m.phase_err_pct = 0.0;
  } else {
    m.phase_err_pct = 100.0 * (rec_h - true_h).norm() / std::max(true_h.norm(), 1e-12);
  }
  return m;
}

namespace {

struct ScenarioTask {
  AttackScenario scenario;
  int k = 0;
  int cell = 0;
};

}  // namespace

ExperimentResult run_experiment(const Grid& grid, const ExperimentConfig& config) {
  if (config.t < 0) throw InvalidInput("experiment: T must be non-negative");
  if (config.samples_per_size < 1) throw InvalidInput("experiment: samples must be at least 1");
  const IndexSet area = grid.node_ids_to_indices(config.area_ids);
  if (area.empty()) throw InvalidInput("experiment: empty study area");

  const VecX theta = solve_dc_power_flow(grid, grid.injections());

  // Scenario plan, in a deterministic order independent of the worker count.
  std::vector<ScenarioTask> tasks;
  int cell_index = 0;
  int scenario_counter = 0;
  for (AttackKind kind : config.kinds) {
    for (int k : config.failure_sizes) {
      Rng enum_rng(derive_seed(config.seed, 0x10000u + static_cast<std::uint64_t>(cell_index)));
      const std::vector<IndexSet> failure_sets =
          enumerate_failure_sets(grid, area, k, config.samples_per_size, enum_rng);
      for (const IndexSet& f : failure_sets) {
        AttackScenario s;
        s.h = area;
        s.failures = f;
        s.kind = kind;
        s.param = kind == AttackKind::Distortion ? config.sigma : config.replay_perturbation;
        s.seed = derive_seed(config.seed, static_cast<std::uint64_t>(scenario_counter));
        tasks.push_back({std::move(s), k, cell_index});
        ++scenario_counter;
      }
      ++cell_index;
    }
  }

  std::vector<ScenarioMetrics> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  const int jobs = std::max(1, config.jobs);

  const auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      const ScenarioTask& task = tasks[i];
      const auto [obs, truth] = simulate_attack(grid, theta, task.scenario);
      Rng detect_rng(derive_seed(task.scenario.seed, 0xD7ECu));
      const auto start = std::chrono::steady_clock::now();
      const ReactOutcome outcome = react(grid, obs.theta_pre, obs.theta_obs, config.t, detect_rng);
      const auto stop = std::chrono::steady_clock::now();
      ScenarioMetrics m = score_scenario(grid, truth, obs, outcome);
      m.scenario_id = static_cast<int>(i);
      m.k = task.k;
      m.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
      rows[i] = m;
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  ExperimentResult out;
  out.rows = std::move(rows);

  std::vector<ExperimentCell> cells(static_cast<std::size_t>(cell_index));
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    ExperimentCell& c = cells[tasks[i].cell];
    const ScenarioMetrics& m = out.rows[i];
    c.kind = m.kind;
    c.k = tasks[i].k;
    ++c.count;
    c.mean_fn += m.fn;
    c.mean_fp += m.fp;
    c.exact_pct += m.exact ? 1.0 : 0.0;
    c.mean_extra_nodes += m.extra_nodes;
    c.mean_phase_err_pct += m.phase_err_pct;
    c.mean_confidence += m.confidence;
    c.mean_runtime_ms += m.runtime_ms;
  }
  for (ExperimentCell& c : cells) {
    if (c.count == 0) continue;
    c.mean_fn /= c.count;
    c.mean_fp /= c.count;
    c.exact_pct = 100.0 * c.exact_pct / c.count;
    c.mean_extra_nodes /= c.count;
    c.mean_phase_err_pct /= c.count;
    c.mean_confidence /= c.count;
    c.mean_runtime_ms /= c.count;
  }
  out.cells = std::move(cells);
  return out;
}

namespace {

const char* kind_name(AttackKind k) {
  return k == AttackKind::Distortion ? "distortion" : "replay";
}

std::string csv_impl(const std::vector<ScenarioMetrics>& rows, bool with_runtime) {
  std::string out = "kind,k,scenario_id,fn,fp,exact,extra_nodes,phase_err_pct,confidence,runtime_ms\n";
  char buf[256];
  for (const ScenarioMetrics& m : rows) {
    if (with_runtime) {
      std::snprintf(buf, sizeof(buf), "%s,%d,%d,%d,%d,%d,%d,%.6f,%.6f,%.3f\n", kind_name(m.kind),
                    m.k, m.scenario_id, m.fn, m.fp, m.exact ? 1 : 0, m.extra_nodes,
                    m.phase_err_pct, m.confidence, m.runtime_ms);
    } else {
      std::snprintf(buf, sizeof(buf), "%s,%d,%d,%d,%d,%d,%d,%.6f,%.6f,\n", kind_name(m.kind), m.k,
                    m.scenario_id, m.fn, m.fp, m.exact ? 1 : 0, m.extra_nodes, m.phase_err_pct,
                    m.confidence);
    }
    out += buf;
  }
  return out;
}

}  // namespace

std::string metrics_csv(const std::vector<ScenarioMetrics>& rows) { return csv_impl(rows, true); }

std::string metrics_csv_stable(const std::vector<ScenarioMetrics>& rows) {
  return csv_impl(rows, false);
}

std::string cells_table(const std::vector<ExperimentCell>& cells) {
  std::string out =
      "kind,k,count,mean_fn,mean_fp,exact_pct,mean_extra_nodes,mean_phase_err_pct,"
      "mean_confidence,mean_runtime_ms\n";
  char buf[320];
  for (const ExperimentCell& c : cells) {
    std::snprintf(buf, sizeof(buf), "%s,%d,%d,%.4f,%.4f,%.2f,%.4f,%.4f,%.4f,%.3f\n",
                  kind_name(c.kind), c.k, c.count, c.mean_fn, c.mean_fp, c.exact_pct,
                  c.mean_extra_nodes, c.mean_phase_err_pct, c.mean_confidence, c.mean_runtime_ms);
    out += buf;
  }
  return out;
}

ExperimentConfig config_from_json_text(const std::string& text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("config: ") + e.what());
  }
  try {
    ExperimentConfig c;
    c.grid_path = j.value("grid", std::string());
    for (const auto& v : j.at("area")) c.area_ids.push_back(v.get<int>());
    for (const auto& v : j.at("failure_sizes")) c.failure_sizes.push_back(v.get<int>());
    c.samples_per_size = j.value("samples_per_size", 100);
    if (j.contains("attacks")) {
      c.kinds.clear();
      for (const auto& v : j.at("attacks")) {
        const std::string name = v.get<std::string>();
        if (name == "distortion") {
          c.kinds.push_back(AttackKind::Distortion);
        } else if (name == "replay") {
          c.kinds.push_back(AttackKind::Replay);
        } else {
          throw InvalidInput("config: unknown attack kind '" + name + "'");
        }
      }
    }
    c.sigma = j.value("sigma", -1.0);
    c.replay_perturbation = j.value("replay_perturbation", -1.0);
    c.t = j.value("T", 20);
    c.seed = j.value("seed", static_cast<std::uint64_t>(1));
    c.jobs = j.value("jobs", 1);
    return c;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("config: ") + e.what());
  }
}

ExperimentConfig load_config(const std::string& path) {
  return config_from_json_text(read_text_file(path));
}

}  // namespace reactgrid
