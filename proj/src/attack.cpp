#include "reactgrid/attack.hpp"

#include <set>

#include "reactgrid/power_flow.hpp"
#include "reactgrid/topology.hpp"

namespace reactgrid {

Grid apply_line_failures(const Grid& grid, const IndexSet& failures) {
  for (int e : failures) {
    if (e < 0 || e >= grid.edge_count()) throw InvalidInput("failure set references unknown edge");
  }
  if (!grid.connected_without(failures))
    throw DisconnectsGrid("removing the failure set disconnects the grid");
  return grid.without_edges(failures);
}

std::pair<Observation, GroundTruth> simulate_attack(const Grid& grid, const VecX& theta,
                                                    const AttackScenario& scenario, Rng& rng) {
  const int n = grid.node_count();
  if (theta.size() != n) throw InvalidInput("simulate_attack: phase vector length mismatch");
  if (!set_subset(scenario.failures, induced_edges(grid, scenario.h)))
    throw InvalidInput("simulate_attack: failures must lie inside the attacked area");

  Grid grid_post = apply_line_failures(grid, scenario.failures);
  const VecX theta_post = solve_dc_power_flow(grid_post, grid.injections());

  VecX theta_obs = theta_post;
  if (scenario.kind == AttackKind::Distortion) {
    const double sigma =
        scenario.param >= 0.0 ? scenario.param : 0.1 * theta.cwiseAbs().maxCoeff();
    for (int v : scenario.h) theta_obs[v] = theta_post[v] + sigma * rng.gaussian();
  } else {
    const IndexSet hbar = set_complement(scenario.h, n);
    double scale = scenario.param;
    if (scale < 0.0) {
      double mx = 0.0;
      for (int v : hbar) mx = std::max(mx, std::abs(grid.injection(v)));
      scale = 0.2 * mx;
    }
    // Replayed injections: keep p inside H, perturb outside with zero-sum
    // noise so the flow equations stay solvable on the original grid.
    VecX p2 = grid.injections();
    if (!hbar.empty()) {
      VecX zeta(static_cast<Eigen::Index>(hbar.size()));
      for (Eigen::Index i = 0; i < zeta.size(); ++i) zeta[i] = scale * rng.gaussian();
      zeta.array() -= zeta.mean();
      for (std::size_t i = 0; i < hbar.size(); ++i) p2[hbar[i]] += zeta[static_cast<Eigen::Index>(i)];
    }
    const VecX theta_replay = solve_dc_power_flow(grid, p2);
    for (int v : scenario.h) theta_obs[v] = theta_replay[v];
  }

  Observation obs;
  obs.theta_pre = theta;
  obs.theta_obs = std::move(theta_obs);
  obs.p = admittance_matrix(grid) * theta;

  GroundTruth truth;
  truth.theta_post = theta_post;
  truth.grid_post = std::move(grid_post);
  truth.scenario = scenario;
  return {std::move(obs), std::move(truth)};
}

std::pair<Observation, GroundTruth> simulate_attack(const Grid& grid, const VecX& theta,
                                                    const AttackScenario& scenario) {
  Rng rng(scenario.seed);
  return simulate_attack(grid, theta, scenario, rng);
}

PartitionGadget gen_3partition_gadget(const std::vector<long long>& s, long long b,
                                      bool enforce_bounds) {
  if (s.empty() || s.size() % 3 != 0) throw MalformedInstance("need 3k elements");
  const long long k = static_cast<long long>(s.size()) / 3;
  long long sum = 0;
  for (long long v : s) {
    if (v <= 0) throw MalformedInstance("elements must be positive");
    if (enforce_bounds && (4 * v <= b || 2 * v >= b))
      throw MalformedInstance("element " + std::to_string(v) + " outside (B/4, B/2)");
    sum += v;
  }
  if (sum != k * b) throw MalformedInstance("elements must sum to k*B");

  // Supply side X = {1..k} at injection B, demand side Y = {k+1..4k} at
  // -s_j, complete bipartite with unit reactances.
  std::vector<Node> nodes;
  for (long long i = 1; i <= k; ++i) nodes.push_back({static_cast<int>(i), static_cast<double>(b)});
  for (long long j = 0; j < 3 * k; ++j)
    nodes.push_back({static_cast<int>(k + 1 + j), -static_cast<double>(s[j])});
  std::vector<Edge> edges;
  int eid = 0;
  for (long long i = 1; i <= k; ++i) {
    for (long long j = k + 1; j <= 4 * k; ++j) {
      edges.push_back({eid++, static_cast<int>(i), static_cast<int>(j), 1.0});
    }
  }

  PartitionGadget out;
  out.grid = Grid::create(std::move(nodes), std::move(edges), 1);
  const int n = out.grid.node_count();
  out.theta = VecX::Zero(n);
  out.theta_prime = VecX::Zero(n);
  for (long long j = 0; j < 3 * k; ++j) {
    const int idx = out.grid.node_index(static_cast<int>(k + 1 + j));
    out.theta[idx] = -static_cast<double>(s[j]) / static_cast<double>(k);
    out.theta_prime[idx] = -static_cast<double>(s[j]);
  }
  out.h = all_nodes(out.grid);
  return out;
}

namespace {

long long binomial_capped(int n, int k, long long cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

}  // namespace

std::vector<IndexSet> enumerate_failure_sets(const Grid& grid, const IndexSet& area, int k,
                                             int sample_n, Rng& rng) {
  if (k < 1) throw InvalidInput("enumerate_failure_sets: k must be at least 1");
  if (sample_n < 1) throw InvalidInput("enumerate_failure_sets: sample_n must be at least 1");
  const IndexSet edges = induced_edges(grid, area);
  const int m = static_cast<int>(edges.size());
  std::vector<IndexSet> out;
  if (k > m) return out;

  const long long total = binomial_capped(m, k, sample_n);
  if (total <= sample_n) {
    // Full enumeration in lexicographic order.
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      IndexSet f(k);
      for (int i = 0; i < k; ++i) f[i] = edges[pick[i]];
      if (grid.connected_without(f)) out.push_back(std::move(f));
      int i = k - 1;
      while (i >= 0 && pick[i] == m - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
  }

  // Too many subsets: draw distinct uniform ones, skipping any that
  // disconnect the grid. Bounded attempts keep this terminating when valid
  // subsets are scarce.
  std::set<IndexSet> seen;
  long long attempts = 0;
  const long long attempt_cap = 200LL * sample_n + 1000;
  std::vector<int> positions(m);
  while (static_cast<int>(out.size()) < sample_n && attempts < attempt_cap) {
    ++attempts;
    for (int i = 0; i < m; ++i) positions[i] = i;
    IndexSet f(k);
    for (int i = 0; i < k; ++i) {
      const int j = rng.uniform_int(i, m - 1);
      std::swap(positions[i], positions[j]);
      f[i] = edges[positions[i]];
    }
    std::sort(f.begin(), f.end());
    if (!seen.insert(f).second) continue;
    if (grid.connected_without(f)) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace reactgrid
