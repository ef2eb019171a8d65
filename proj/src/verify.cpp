#include "reactgrid/verify.hpp"

#include <cmath>

#include "reactgrid/attack.hpp"
#include "reactgrid/containment.hpp"
#include "reactgrid/detection.hpp"
#include "reactgrid/power_flow.hpp"
#include "reactgrid/synth.hpp"
#include "reactgrid/topology.hpp"

namespace reactgrid {

std::vector<CheckResult> verify_flow_laws(int grids, Rng& rng) {
  double worst_residual = 0.0;
  double worst_conservation = 0.0;
  for (int g = 0; g < grids; ++g) {
    const int n = 10 + rng.uniform_int(0, 50);
    const Grid grid = random_connected_grid(n, n / 3 + rng.uniform_int(0, n / 3), rng);
    const VecX theta = solve_dc_power_flow(grid, grid.injections());
    const MatX a = admittance_matrix(grid);
    worst_residual = std::max(worst_residual, (a * theta - grid.injections()).cwiseAbs().maxCoeff());
    const VecX flows = line_flows(grid, theta);
    const VecX conserved = incidence_matrix(grid) * flows - grid.injections();
    worst_conservation = std::max(worst_conservation, conserved.cwiseAbs().maxCoeff());
  }
  std::vector<CheckResult> out;
  out.push_back({"flow-residual", worst_residual < tol::solve,
                 "worst |A theta - p|_inf = " + std::to_string(worst_residual)});
  out.push_back({"flow-conservation", worst_conservation < tol::solve,
                 "worst |D f - p|_inf = " + std::to_string(worst_conservation)});
  return out;
}

namespace {

// Random grid with a planted area whose complement keeps a nonempty
// interior, plus a connectivity-preserving failure set of size <= 3.
struct PlantedScenario {
  Grid grid;
  IndexSet h;
  IndexSet failures;
  VecX theta;
};

PlantedScenario plant_scenario(Rng& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    const int n = 20 + rng.uniform_int(0, 40);
    Grid grid = random_connected_grid(n, n / 4, rng);
    const int hsize = 3 + rng.uniform_int(0, std::max(1, n / 6));
    IndexSet h = random_connected_area(grid, hsize, rng);
    const IndexSet hbar = set_complement(h, n);
    if (interior(grid, hbar).empty()) continue;

    const int k = rng.uniform_int(0, 3);
    IndexSet failures;
    if (k > 0) {
      Rng frng(rng.next_u64());
      const auto sets = enumerate_failure_sets(grid, h, k, 1, frng);
      if (!sets.empty()) failures = sets.front();
    }
    VecX theta = solve_dc_power_flow(grid, grid.injections());
    return {std::move(grid), std::move(h), std::move(failures), std::move(theta)};
  }
  throw Error("plant_scenario: no admissible instance found");
}

}  // namespace

std::vector<CheckResult> verify_containment(int trials, Rng& rng) {
  int distortion_bad = 0;
  int replay_bad = 0;
  int containment_bad = 0;
  for (int t = 0; t < trials; ++t) {
    PlantedScenario sc = plant_scenario(rng);
    const MatX a = admittance_matrix(sc.grid);
    const IndexSet hbar = set_complement(sc.h, sc.grid.node_count());

    AttackScenario attack{sc.h, sc.failures, AttackKind::Distortion, -1.0, rng.next_u64()};
    {
      const auto [obs, truth] = simulate_attack(sc.grid, sc.theta, attack);
      const VecX v = a * obs.theta_obs - obs.p;
      const IndexSet s0 = support(v, support_threshold(v));
      const IndexSet expected = set_complement(interior(sc.grid, hbar), sc.grid.node_count());
      if (s0 != expected) ++distortion_bad;
    }
    attack.kind = AttackKind::Replay;
    attack.seed = rng.next_u64();
    {
      const auto [obs, truth] = simulate_attack(sc.grid, sc.theta, attack);
      const VecX v = a * obs.theta_obs - obs.p;
      const IndexSet s0 = support(v, support_threshold(v));
      const IndexSet expected =
          set_union(boundary(sc.grid, sc.h), boundary(sc.grid, hbar));
      if (s0 != expected) ++replay_bad;
      bool contained = false;
      for (const CandidateArea& cand : candidate_areas(sc.grid, s0)) {
        contained = contained || set_subset(sc.h, cand.nodes);
      }
      if (!contained) ++containment_bad;
    }
  }
  std::vector<CheckResult> out;
  out.push_back({"distortion-support", distortion_bad == 0,
                 std::to_string(distortion_bad) + "/" + std::to_string(trials) + " mismatches"});
  out.push_back({"replay-support", replay_bad == 0,
                 std::to_string(replay_bad) + "/" + std::to_string(trials) + " mismatches"});
  out.push_back({"replay-candidate-containment", containment_bad == 0,
                 std::to_string(containment_bad) + "/" + std::to_string(trials) + " misses"});
  return out;
}

std::vector<CheckResult> verify_weight_probability(int m_min, int m_max, int trials, Rng& rng) {
  std::vector<CheckResult> out;
  for (int m = m_min; m <= m_max; ++m) {
    double worst_sigmas = 0.0;
    int worst_k = 1;
    for (int k = 1; k <= m - 1; ++k) {
      const double q = weight_success_probability(m, k);
      int hits = 0;
      for (int t = 0; t < trials; ++t) {
        double lo = 0.0, hi = 0.0;
        for (int i = 0; i < m; ++i) {
          const double w = rng.exponential();
          (i < k ? lo : hi) += w;
        }
        if (lo < hi) ++hits;
      }
      const double freq = static_cast<double>(hits) / trials;
      const double sd = std::sqrt(q * (1.0 - q) / trials);
      const double sigmas = std::abs(freq - q) / std::max(sd, 1e-300);
      if (sigmas > worst_sigmas) {
        worst_sigmas = sigmas;
        worst_k = k;
      }
    }
    out.push_back({"weight-probability-m" + std::to_string(m), worst_sigmas <= 3.0,
                   "worst k = " + std::to_string(worst_k) + " at " + std::to_string(worst_sigmas) +
                       " binomial sd"});
  }
  return out;
}

std::vector<CheckResult> verify_cycle_detection(int trials, Rng& rng) {
  const int m = 8;
  std::vector<CheckResult> out;

  // Below half the cycle: the unit-weight solve alone recovers the failures.
  int exact = 0;
  for (int t = 0; t < trials; ++t) {
    PlantedCase pc = prism_case(m, rng);
    Rng frng(rng.next_u64());
    const auto sets = enumerate_failure_sets(pc.grid, pc.area, 3, 1, frng);
    const VecX theta = solve_dc_power_flow(pc.grid, pc.grid.injections());
    AttackScenario attack{pc.area, sets.front(), AttackKind::Distortion, -1.0, rng.next_u64()};
    const auto [obs, truth] = simulate_attack(pc.grid, theta, attack);
    Rng drng(rng.next_u64());
    const DetectionResult res = lifd(pc.grid, pc.area, theta, obs.theta_obs, 0, drng);
    if (res.failed_edges == attack.failures) ++exact;
  }
  out.push_back({"cycle-below-half-identity", exact == trials,
                 std::to_string(exact) + "/" + std::to_string(trials) + " exact"});

  // Above half: randomized weights must succeed, in about
  // 2^(m-1) / sum_{j>=k} C(m-1, j) attempts.
  const int k = 5;
  // 2^(m-1) / sum_{j>=k} C(m-1,j), the reciprocal of the per-draw success
  // probability.
  const double expected_iters = 1.0 / weight_success_probability(m, k);
  int successes = 0;
  long long iters = 0;
  for (int t = 0; t < trials; ++t) {
    PlantedCase pc = prism_case(m, rng);
    Rng frng(rng.next_u64());
    const auto sets = enumerate_failure_sets(pc.grid, pc.area, k, 1, frng);
    const VecX theta = solve_dc_power_flow(pc.grid, pc.grid.injections());
    AttackScenario attack{pc.area, sets.front(), AttackKind::Distortion, -1.0, rng.next_u64()};
    const auto [obs, truth] = simulate_attack(pc.grid, theta, attack);
    Rng drng(rng.next_u64());
    const DetectionResult res = lifd(pc.grid, pc.area, theta, obs.theta_obs, 200, drng);
    if (res.failed_edges == attack.failures &&
        res.confidence >= tol::confidence_success - 1e-9) {
      ++successes;
      iters += res.iterations;
    }
  }
  const double mean_iters = successes > 0 ? static_cast<double>(iters) / successes : 1e9;
  const bool pass = successes == trials && mean_iters <= 2.0 * expected_iters;
  char detail[160];
  std::snprintf(detail, sizeof(detail), "%d/%d detected, mean %.2f weighted solves (bound %.2f)",
                successes, trials, mean_iters, 2.0 * expected_iters);
  out.push_back({"cycle-above-half-randomized", pass, detail});
  return out;
}

}  // namespace reactgrid
