#pragma once

#include <optional>
#include <vector>

#include "reactgrid/common.hpp"
#include "reactgrid/grid.hpp"

namespace reactgrid {

// Candidate areas possibly containing the attacked subgraph, in the order
// the detection loop consumes them: the suspicious set S0 first (the
// distortion hypothesis), then, for each merged component G_i of the graph
// minus S0, the complement V \ G_i (replay hypotheses, largest excluded
// component first).
struct CandidateArea {
  enum class Origin { DistortionHypothesis, ReplayHypothesis };
  IndexSet nodes;
  Origin origin = Origin::DistortionHypothesis;
  int excluded_component = -1;  // index into the merged components, replay only
  int rank = 0;
};

// Nodes whose flow equation is violated by the observation:
// supp(A theta* - p) under the given absolute threshold.
IndexSet compute_s0(const MatX& a, const VecX& p, const VecX& theta_star, double tol_supp);

std::vector<CandidateArea> candidate_areas(const Grid& grid, const IndexSet& s0);

struct RefinedArea {
  IndexSet nodes;           // S_b, the refined area estimate
  IndexSet pre_refinement;  // S_a = int(candidate)
  VecX y;                   // recovered outside-consistent angles over S_a
};

// Shrinks a candidate area: takes S_a = int(candidate), solves
//   A_{Sbar|S} y = A_{Sbar|Sbar}(theta_Sbar - theta*_Sbar) + A_{Sbar|S} theta_S
// in the minimum-norm least-squares sense, and returns
// S_b = supp(y - theta*_{S_a}). Returns nullopt when the system's relative
// residual exceeds the feasibility tolerance, which signals that the
// candidate does not contain the attacked area. A candidate whose interior
// is the whole grid leaves the system without constraints; refinement is
// then skipped and S_b = S_a is returned.
std::optional<RefinedArea> refine_area(const Grid& grid, const VecX& theta, const VecX& theta_star,
                                       const CandidateArea& candidate,
                                       double tol_supp_rel = tol::supp_rel);

// Diagnostic used by tests: the sufficient conditions under which the
// refinement recovers the attacked area exactly, namely V_S \ V_H inside
// the boundary of S and a matching from outside S that covers d(S).
bool check_exactness_conditions(const Grid& grid, const IndexSet& s, const IndexSet& h);

}  // namespace reactgrid
