#pragma once

#include "reactgrid/common.hpp"
#include "reactgrid/grid.hpp"
#include "reactgrid/lp.hpp"

namespace reactgrid {

// Weighted-L1 line-failure recovery on an area S, posed as an LP:
//
//   min sum_i w_i |x_i|   over x in R^{|E_S|}, y in R^{|V_S|}
//   s.t. A_{S|S}(theta_S - y) + A_{S|Sbar}(theta_Sbar - theta*_Sbar) = D_S x
//        A_{Sbar|S}(theta_S - y) + A_{Sbar|Sbar}(theta_Sbar - theta*_Sbar) = 0
//
// x carries one entry per induced edge of S (a hypothesized phantom flow on
// a failed line), y the recovered phase angles inside S. Absolute values are
// linearized by splitting x into non-negative parts; y is encoded as a
// difference of non-negatives as well. Variable layout of the produced LP:
// [x+ | x- | y+ | y-].
struct FailureLp {
  LpProblem<double> problem;
  IndexSet area_nodes;  // S, node positions
  IndexSet area_edges;  // E_S, edge positions

  struct Decoded {
    VecX x;  // over area_edges
    VecX y;  // over area_nodes
  };
  Decoded decode(const VecX& lp_x) const;
};

// `theta_star` is the full observed vector; only its entries outside the
// area are read. `weights` must hold one strictly positive entry per induced
// edge of the area. Throws EmptyArea when the area has neither nodes nor
// edges.
FailureLp build_failure_lp(const Grid& grid, const IndexSet& area_nodes, const VecX& theta,
                           const VecX& theta_star, const VecX& weights);

}  // namespace reactgrid
