#include "reactgrid/detection.hpp"

#include <cmath>

#include "reactgrid/containment.hpp"
#include "reactgrid/failure_lp.hpp"
#include "reactgrid/power_flow.hpp"
#include "reactgrid/topology.hpp"

namespace reactgrid {

double confidence(const Grid& grid, const IndexSet& area, const IndexSet& f_dagger,
                  const VecX& theta_dagger, const VecX& theta_star, const VecX& p) {
  const int n = grid.node_count();
  if (theta_star.size() != n || p.size() != n)
    throw InvalidInput("confidence: vector length mismatch");
  if (theta_dagger.size() != static_cast<Eigen::Index>(area.size()))
    throw InvalidInput("confidence: recovered angles must cover the area");

  const MatX a = admittance_matrix(grid);
  const MatX a_dag = admittance_after_removal(grid, f_dagger);

  VecX p_dag = VecX::Zero(n);
  const IndexSet outside = set_complement(area, n);
  for (int j : outside) p_dag += a.col(j) * theta_star[j];
  for (std::size_t i = 0; i < area.size(); ++i)
    p_dag += a_dag.col(area[i]) * theta_dagger[static_cast<Eigen::Index>(i)];

  const double pnorm = p.norm();
  if (pnorm == 0.0) return (p_dag.norm() == 0.0) ? 100.0 : 0.0;
  return std::max(0.0, 1.0 - (p_dag - p).norm() / pnorm) * 100.0;
}

VecX sample_exp_weights(int m, Rng& rng) {
  if (m < 1) throw InvalidInput("sample_exp_weights: m must be at least 1");
  VecX w(m);
  for (int i = 0; i < m; ++i) w[i] = rng.exponential();
  return w;
}

double weight_success_probability(int m, int k) {
  if (m < 2 || m > 64 || k < 1 || k > m - 1)
    throw OutOfRange("weight_success_probability: need 2 <= m <= 64, 1 <= k <= m-1");
  // Binomials C(m-1, j) computed exactly in 64-bit (fits for m <= 64).
  std::uint64_t binom = 1;  // C(m-1, 0)
  std::uint64_t sum = 0;
  for (int j = 0; j <= m - 1; ++j) {
    if (j >= k) sum += binom;
    binom = binom * static_cast<std::uint64_t>(m - 1 - j) / static_cast<std::uint64_t>(j + 1);
  }
  return static_cast<double>(static_cast<long double>(sum) / std::ldexp(1.0L, m - 1));
}

namespace {

// One weighted LP solve on the area; failures surface as a zero-confidence
// result rather than exceptions so the caller can keep iterating.
DetectionResult solve_weighted(const Grid& grid, const IndexSet& area, const VecX& theta,
                               const VecX& theta_star, const VecX& p, const VecX& weights) {
  DetectionResult r;
  r.area = area;
  r.theta_recovered = subvector(theta_star, area);
  if (area.empty()) {
    // Nothing to recover; score the observation as-is.
    r.confidence = confidence(grid, area, {}, VecX(), theta_star, p);
    return r;
  }
  try {
    const FailureLp flp = build_failure_lp(grid, area, theta, theta_star, weights);
    const LpSolution<double> sol = solve_lp(flp.problem);
    if (sol.status != LpStatus::Optimal) {
      r.lp_ok = false;
      return r;
    }
    const FailureLp::Decoded dec = flp.decode(sol.x);
    const double tol_x = tol::supp_rel * std::max(1.0, dec.x.size() > 0
                                                           ? dec.x.cwiseAbs().maxCoeff()
                                                           : 0.0);
    const IndexSet local = support(dec.x, tol_x);
    r.failed_edges.reserve(local.size());
    for (int i : local) r.failed_edges.push_back(flp.area_edges[i]);
    r.theta_recovered = dec.y;
    r.confidence = confidence(grid, area, r.failed_edges, r.theta_recovered, theta_star, p);
  } catch (const LpIterationLimit&) {
    r.lp_ok = false;
  }
  return r;
}

}  // namespace

DetectionResult lifd(const Grid& grid, const IndexSet& area, const VecX& theta,
                     const VecX& theta_star, int t, Rng& rng) {
  if (t < 0) throw InvalidInput("lifd: T must be non-negative");
  const VecX p = admittance_matrix(grid) * theta;
  const int ms = static_cast<int>(induced_edges(grid, area).size());

  DetectionResult current =
      solve_weighted(grid, area, theta, theta_star, p, VecX::Ones(ms));
  DetectionResult best = current;

  int counter = 0;
  while (current.confidence < tol::confidence_success && counter < t && ms > 0) {
    ++counter;
    const VecX w = sample_exp_weights(ms, rng);
    current = solve_weighted(grid, area, theta, theta_star, p, w);
    if (current.confidence > best.confidence) best = current;
  }

  DetectionResult out =
      current.confidence >= tol::confidence_success ? current : best;
  out.iterations = counter;
  return out;
}

ReactOutcome react(const Grid& grid, const VecX& theta, const VecX& theta_star, int t, Rng& rng) {
  const MatX a = admittance_matrix(grid);
  const VecX p = a * theta;
  const VecX violation = a * theta_star - p;
  const IndexSet s0 = support_rel(violation);

  const std::vector<CandidateArea> candidates = candidate_areas(grid, s0);

  ReactOutcome best;
  best.result.confidence = -1.0;
  for (const CandidateArea& cand : candidates) {
    const auto refined = refine_area(grid, theta, theta_star, cand);
    if (!refined) continue;  // candidate cannot contain the attacked area
    const IndexSet& s = refined->nodes;

    DetectionResult res = solve_weighted(grid, s, theta, theta_star, p,
                                         VecX::Ones(static_cast<int>(
                                             induced_edges(grid, s).size())));
    if (res.confidence < tol::confidence_success) {
      res = lifd(grid, s, theta, theta_star, t, rng);
    }

    if (res.confidence >= tol::confidence_success - 1e-9) {
      ReactOutcome out;
      out.result = std::move(res);
      out.success = true;
      const VecX diff = out.result.theta_recovered - subvector(theta_star, s);
      const IndexSet local = support_rel(diff);
      out.detected_h.reserve(local.size());
      for (int i : local) out.detected_h.push_back(s[i]);
      return out;
    }
    if (res.confidence > best.result.confidence) {
      best.result = std::move(res);
      best.detected_h = s;
    }
  }

  if (best.result.confidence < 0.0) {
    // Every candidate was refuted by refinement; report the raw suspicious
    // set with no recovery.
    best.result = DetectionResult{};
    best.result.area = s0;
    best.result.theta_recovered = subvector(theta_star, s0);
    best.result.confidence = confidence(grid, s0, {}, best.result.theta_recovered, theta_star, p);
    best.detected_h = s0;
  }
  best.success = false;
  return best;
}

}  // namespace reactgrid
