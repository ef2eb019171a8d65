#include "reactgrid/failure_lp.hpp"

#include "reactgrid/power_flow.hpp"
#include "reactgrid/topology.hpp"

namespace reactgrid {

FailureLp::Decoded FailureLp::decode(const VecX& lp_x) const {
  const int ms = static_cast<int>(area_edges.size());
  const int ns = static_cast<int>(area_nodes.size());
  if (lp_x.size() != 2 * ms + 2 * ns) throw InvalidInput("decode: wrong solution length");
  Decoded d;
  d.x = lp_x.segment(0, ms) - lp_x.segment(ms, ms);
  d.y = lp_x.segment(2 * ms, ns) - lp_x.segment(2 * ms + ns, ns);
  return d;
}

FailureLp build_failure_lp(const Grid& grid, const IndexSet& area_nodes, const VecX& theta,
                           const VecX& theta_star, const VecX& weights) {
  const int n = grid.node_count();
  if (theta.size() != n || theta_star.size() != n)
    throw InvalidInput("build_failure_lp: phase vector length mismatch");

  FailureLp out;
  out.area_nodes = area_nodes;
  out.area_edges = induced_edges(grid, area_nodes);
  const int ns = static_cast<int>(out.area_nodes.size());
  const int ms = static_cast<int>(out.area_edges.size());
  if (ns == 0 && ms == 0) throw EmptyArea("build_failure_lp: empty area");
  if (weights.size() != ms) throw InvalidInput("build_failure_lp: need one weight per area edge");
  for (int i = 0; i < ms; ++i) {
    if (!(weights[i] > 0.0)) throw InvalidInput("build_failure_lp: weights must be positive");
  }

  const MatX a = admittance_matrix(grid);
  const IndexSet outside = set_complement(area_nodes, n);

  // Both constraint blocks share the right-hand side (A*u)_row with
  // u_S = theta_S and u_Sbar = theta_Sbar - theta*_Sbar.
  VecX u = theta;
  for (int j : outside) u[j] -= theta_star[j];
  const VecX rhs_full = a * u;

  // Row order: area nodes first, then the complement.
  std::vector<int> row_node(n);
  for (int i = 0; i < ns; ++i) row_node[i] = area_nodes[i];
  for (std::size_t i = 0; i < outside.size(); ++i) row_node[ns + i] = outside[i];

  const int ncols = 2 * ms + 2 * ns;
  MatX eq = MatX::Zero(n, ncols);
  VecX rhs(n);
  for (int r = 0; r < n; ++r) {
    const int g = row_node[r];
    rhs[r] = rhs_full[g];
    for (int k = 0; k < ms; ++k) {
      const int e = out.area_edges[k];
      double dge = 0.0;
      if (grid.edge_tail(e) == g) dge = 1.0;
      if (grid.edge_head(e) == g) dge = -1.0;
      if (dge != 0.0) {
        eq(r, k) = dge;
        eq(r, ms + k) = -dge;
      }
    }
    for (int j = 0; j < ns; ++j) {
      const double av = a(g, out.area_nodes[j]);
      if (av != 0.0) {
        eq(r, 2 * ms + j) = av;
        eq(r, 2 * ms + ns + j) = -av;
      }
    }
  }

  VecX c = VecX::Zero(ncols);
  c.segment(0, ms) = weights;
  c.segment(ms, ms) = weights;

  out.problem.c = std::move(c);
  out.problem.eq = std::move(eq);
  out.problem.rhs = std::move(rhs);
  return out;
}

}  // namespace reactgrid
