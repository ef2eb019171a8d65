#pragma once

#include "reactgrid/common.hpp"
#include "reactgrid/grid.hpp"

namespace reactgrid {

// DC power flow on a reactive network. With A the weighted Laplacian built
// from line reactances (a_uv = -sum 1/r over the lines joining u and v,
// diagonal set so rows sum to zero), phase angles satisfy A*theta = p.
// The flow on a line oriented u->v is (theta_u - theta_v) / r_uv.

template <class Scalar = double>
Mat<Scalar> admittance_matrix(const Grid& g) {
  const int n = g.node_count();
  Mat<Scalar> a = Mat<Scalar>::Zero(n, n);
  for (int e = 0; e < g.edge_count(); ++e) {
    const int u = g.edge_tail(e);
    const int v = g.edge_head(e);
    const Scalar w = Scalar(1) / static_cast<Scalar>(g.reactance(e));
    a(u, v) -= w;
    a(v, u) -= w;
    a(u, u) += w;
    a(v, v) += w;
  }
  return a;
}

// Admittance of the grid with the given edge positions removed. Works on any
// removal, including ones that disconnect the graph; used to evaluate
// hypothesized failure sets without constructing a Grid.
template <class Scalar = double>
Mat<Scalar> admittance_after_removal(const Grid& g, const IndexSet& removed_edges) {
  Mat<Scalar> a = admittance_matrix<Scalar>(g);
  for (int e : removed_edges) {
    const int u = g.edge_tail(e);
    const int v = g.edge_head(e);
    const Scalar w = Scalar(1) / static_cast<Scalar>(g.reactance(e));
    a(u, v) += w;
    a(v, u) += w;
    a(u, u) -= w;
    a(v, v) -= w;
  }
  return a;
}

// Node-edge incidence under the stored orientation: +1 at the tail (lower
// node id), -1 at the head.
template <class Scalar = double>
Mat<Scalar> incidence_matrix(const Grid& g) {
  Mat<Scalar> d = Mat<Scalar>::Zero(g.node_count(), g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    d(g.edge_tail(e), e) = Scalar(1);
    d(g.edge_head(e), e) = Scalar(-1);
  }
  return d;
}

// Solves A*theta = p with theta pinned to zero at the reference node.
// Throws SingularSystem when p is unbalanced or the residual check fails,
// Disconnected when the grid is not connected.
VecX solve_dc_power_flow(const Grid& g, const VecX& p);

// Per-edge flows (theta_tail - theta_head) / r, in edge-position order.
VecX line_flows(const Grid& g, const VecX& theta);

}  // namespace reactgrid
