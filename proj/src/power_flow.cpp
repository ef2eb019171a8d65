#include "reactgrid/power_flow.hpp"

#include <Eigen/Cholesky>

namespace reactgrid {

VecX solve_dc_power_flow(const Grid& g, const VecX& p) {
  const int n = g.node_count();
  if (p.size() != n) throw InvalidInput("injection vector has wrong length");
  const double scale = std::max(1.0, p.cwiseAbs().maxCoeff());
  if (std::abs(p.sum()) > tol::solve * scale * n)
    throw SingularSystem("injections do not sum to zero");
  if (!g.is_connected()) throw Disconnected("grid is not connected");

  const MatX a = admittance_matrix(g);
  const int ref = g.reference();

  // Grounded system: drop the reference row/column, solve, re-insert zero.
  // For a connected graph the reduced Laplacian is positive definite.
  const int m = n - 1;
  MatX ared(m, m);
  VecX pred(m);
  for (int i = 0, ri = 0; i < n; ++i) {
    if (i == ref) continue;
    pred[ri] = p[i];
    for (int j = 0, rj = 0; j < n; ++j) {
      if (j == ref) continue;
      ared(ri, rj) = a(i, j);
      ++rj;
    }
    ++ri;
  }

  VecX theta = VecX::Zero(n);
  if (m > 0) {
    const VecX sol = ared.ldlt().solve(pred);
    for (int i = 0, ri = 0; i < n; ++i) {
      if (i == ref) continue;
      theta[i] = sol[ri++];
    }
  }

  const double residual = (a * theta - p).cwiseAbs().maxCoeff();
  if (residual > tol::solve * scale)
    throw SingularSystem("power flow residual " + std::to_string(residual) + " above tolerance");
  return theta;
}

VecX line_flows(const Grid& g, const VecX& theta) {
  if (theta.size() != g.node_count()) throw InvalidInput("phase vector has wrong length");
  VecX flows(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    flows[e] = (theta[g.edge_tail(e)] - theta[g.edge_head(e)]) / g.reactance(e);
  }
  return flows;
}

}  // namespace reactgrid
