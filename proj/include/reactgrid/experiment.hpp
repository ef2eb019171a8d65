#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reactgrid/attack.hpp"
#include "reactgrid/common.hpp"
#include "reactgrid/detection.hpp"
#include "reactgrid/grid.hpp"

namespace reactgrid {

// Sweep description: for each attack kind and failure size k, enumerate (or
// sample) failure sets inside the study area, simulate, run the detector,
// and score. Fully deterministic in `seed` apart from the runtime column;
// per-scenario seeds are derived by counter.
struct ExperimentConfig {
  std::string grid_path;           // informational; the grid is passed in
  std::vector<int> area_ids;       // study area as external node ids
  std::vector<int> failure_sizes;  // k values
  int samples_per_size = 100;
  std::vector<AttackKind> kinds = {AttackKind::Distortion, AttackKind::Replay};
  double sigma = -1.0;                // negative selects the default scale
  double replay_perturbation = -1.0;  // negative selects the default scale
  int t = 20;
  std::uint64_t seed = 1;
  int jobs = 1;
};

struct ScenarioMetrics {
  AttackKind kind = AttackKind::Distortion;
  int k = 0;
  int scenario_id = 0;
  int fn = 0;               // failed lines missed
  int fp = 0;               // healthy lines reported failed
  bool exact = false;       // fn == 0 and fp == 0
  int extra_nodes = 0;      // detected area nodes outside the true area
  double phase_err_pct = 0.0;
  double confidence = 0.0;
  double runtime_ms = 0.0;
};

// Per (kind, k) aggregate.
struct ExperimentCell {
  AttackKind kind = AttackKind::Distortion;
  int k = 0;
  int count = 0;
  double mean_fn = 0.0;
  double mean_fp = 0.0;
  double exact_pct = 0.0;
  double mean_extra_nodes = 0.0;
  double mean_phase_err_pct = 0.0;
  double mean_confidence = 0.0;
  double mean_runtime_ms = 0.0;
};

struct ExperimentResult {
  std::vector<ScenarioMetrics> rows;
  std::vector<ExperimentCell> cells;
};

// FN/FP against the planted failures, extra detected-area nodes, and the
// relative L2 phase error over the true attacked area. Angles outside the
// area the detector worked on are taken from the observation.
ScenarioMetrics score_scenario(const Grid& grid, const GroundTruth& truth, const Observation& obs,
                               const ReactOutcome& outcome);

ExperimentResult run_experiment(const Grid& grid, const ExperimentConfig& config);

// Fixed CSV contract:
// kind,k,scenario_id,fn,fp,exact,extra_nodes,phase_err_pct,confidence,runtime_ms
std::string metrics_csv(const std::vector<ScenarioMetrics>& rows);
// The same table with the runtime column blanked; used for determinism checks.
std::string metrics_csv_stable(const std::vector<ScenarioMetrics>& rows);

std::string cells_table(const std::vector<ExperimentCell>& cells);

ExperimentConfig config_from_json_text(const std::string& text);
ExperimentConfig load_config(const std::string& path);

}  // namespace reactgrid
