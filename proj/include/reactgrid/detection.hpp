#pragma once

#include "reactgrid/common.hpp"
#include "reactgrid/grid.hpp"
#include "reactgrid/rng.hpp"

namespace reactgrid {

// Result of a line-failure detection run on an area S.
struct DetectionResult {
  IndexSet failed_edges;  // F-dagger, edge positions inside the area
  VecX theta_recovered;   // recovered angles over the area nodes
  IndexSet area;          // the S the detection ran on
  double confidence = 0.0;  // percent, Eq. below
  int iterations = 0;       // weighted re-solves consumed
  bool lp_ok = true;        // false when every LP attempt failed
};

struct ReactOutcome {
  IndexSet detected_h;  // claimed attacked area
  DetectionResult result;
  bool success = false;  // confidence cleared the acceptance threshold
};

// Confidence of a hypothesized solution (F-dagger, theta-dagger) on area S:
// rebuild the injections p-dagger = A_{G|Sbar} theta*_Sbar + A-dagger_{G|S}
// theta-dagger and score 100 * (1 - |p-dagger - p|_2 / |p|_2), clamped at 0.
// 100 means the reconstruction reproduces the known injections exactly.
double confidence(const Grid& grid, const IndexSet& area, const IndexSet& f_dagger,
                  const VecX& theta_dagger, const VecX& theta_star, const VecX& p);

// m iid Exp(1) draws (the diagonal of a weight matrix).
VecX sample_exp_weights(int m, Rng& rng);

// Exact probability that the k smallest-index entries of m iid exponential
// weights sum below the rest: sum_{j=k}^{m-1} C(m-1, j) / 2^{m-1}.
// Supports 2 <= m <= 64, 1 <= k <= m-1; throws OutOfRange otherwise.
double weight_success_probability(int m, int k);

// Randomized weighted-L1 line-failure detection. Solves the failure LP with
// unit weights, then redraws Exp(1) weights and re-solves until the
// confidence clears the threshold or T weighted attempts are spent; returns
// the first passing solution, otherwise the best seen.
DetectionResult lifd(const Grid& grid, const IndexSet& area, const VecX& theta,
                     const VecX& theta_star, int t, Rng& rng);

// Full pipeline: containment candidates, per-candidate refinement, failure
// detection with escalation to randomized weights, early exit on the first
// candidate whose solution clears the confidence threshold. On success the
// detected area is supp(theta_recovered - theta*) over the refined area; on
// failure the best candidate's refined area is reported.
ReactOutcome react(const Grid& grid, const VecX& theta, const VecX& theta_star, int t, Rng& rng);

}  // namespace reactgrid
