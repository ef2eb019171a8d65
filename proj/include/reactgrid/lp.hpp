#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <vector>

#include "reactgrid/common.hpp"

namespace reactgrid {

enum class LpStatus { Optimal, Infeasible, Unbounded };

enum class VarBound { NonNegative, Free };

// min c.x  subject to  eq x = rhs,  x_j >= 0 or x_j free per `bounds`.
// An empty bounds vector means all variables are non-negative.
template <class Scalar>
struct LpProblem {
  Vec<Scalar> c;
  Mat<Scalar> eq;
  Vec<Scalar> rhs;
  std::vector<VarBound> bounds;
};

template <class Scalar>
struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Vec<Scalar> x;
  Scalar objective = Scalar(0);
  int iterations = 0;
};

struct LpOptions {
  double tol = tol::lp;
  int max_iterations = 0;  // 0 selects a size-based limit
};

// Dense two-phase primal simplex on the full tableau. Free variables are
// split internally into differences of non-negatives. Pricing is Dantzig
// with a permanent switch to Bland's rule once the objective stalls, which
// guarantees termination on degenerate problems. Redundant rows discovered
// at the end of phase 1 are dropped. Throws LpIterationLimit if the pivot
// budget is exhausted.
template <class Scalar>
LpSolution<Scalar> solve_lp(const LpProblem<Scalar>& problem, const LpOptions& options = {}) {
  using VecS = Vec<Scalar>;
  using MatS = Mat<Scalar>;

  const int n_orig = static_cast<int>(problem.c.size());
  const int m_orig = static_cast<int>(problem.rhs.size());
  if (problem.eq.rows() != m_orig || (m_orig > 0 && problem.eq.cols() != n_orig))
    throw InvalidInput("lp: inconsistent dimensions");
  if (!problem.bounds.empty() && static_cast<int>(problem.bounds.size()) != n_orig)
    throw InvalidInput("lp: bounds size mismatch");
  for (int j = 0; j < n_orig; ++j)
    if (!std::isfinite(static_cast<double>(problem.c[j]))) throw InvalidInput("lp: non-finite cost");

  const Scalar tolerance = static_cast<Scalar>(options.tol);
  const Scalar pivot_eps = static_cast<Scalar>(1e-9);

  const auto bound_of = [&](int j) {
    return problem.bounds.empty() ? VarBound::NonNegative : problem.bounds[j];
  };

  // Split free variables: column j plus a negated twin.
  std::vector<int> col_orig;   // original variable of each extended column
  std::vector<Scalar> col_sign;
  for (int j = 0; j < n_orig; ++j) {
    col_orig.push_back(j);
    col_sign.push_back(Scalar(1));
    if (bound_of(j) == VarBound::Free) {
      col_orig.push_back(j);
      col_sign.push_back(Scalar(-1));
    }
  }
  const int n_ext = static_cast<int>(col_orig.size());

  LpSolution<Scalar> out;
  out.x = VecS::Zero(n_orig);

  if (m_orig == 0) {
    // No constraints: the minimum sits at zero unless some direction of
    // decrease exists.
    for (int j = 0; j < n_ext; ++j) {
      if (problem.c[col_orig[j]] * col_sign[j] < -tolerance) {
        out.status = LpStatus::Unbounded;
        return out;
      }
    }
    out.status = LpStatus::Optimal;
    return out;
  }

  // Extended matrix with rhs flipped non-negative.
  MatS a(m_orig, n_ext);
  VecS b(m_orig);
  for (int i = 0; i < m_orig; ++i) {
    const Scalar flip = problem.rhs[i] < Scalar(0) ? Scalar(-1) : Scalar(1);
    b[i] = flip * problem.rhs[i];
    for (int j = 0; j < n_ext; ++j) a(i, j) = flip * problem.eq(i, col_orig[j]) * col_sign[j];
  }

  int m = m_orig;
  const int n_total = n_ext + m;  // artificials appended
  MatS t(m, n_total + 1);
  t.setZero();
  t.block(0, 0, m, n_ext) = a;
  for (int i = 0; i < m; ++i) t(i, n_ext + i) = Scalar(1);
  t.col(n_total) = b;
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n_ext + i;

  const int max_iter = options.max_iterations > 0
                           ? options.max_iterations
                           : 200 + 60 * (m + n_ext);
  int iterations = 0;
  bool bland = false;
  int stall = 0;
  const int stall_limit = 4 * (m + n_ext) + 20;

  Eigen::Matrix<Scalar, 1, Eigen::Dynamic> d(n_total + 1);  // reduced costs, last = -objective

  const auto pivot = [&](int row, int col) {
    t.row(row) /= t(row, col);
    for (int r = 0; r < m; ++r) {
      if (r == row) continue;
      const Scalar f = t(r, col);
      if (f != Scalar(0)) t.row(r) -= f * t.row(row);
    }
    const Scalar f = d[col];
    if (f != Scalar(0)) d -= f * t.row(row);
    basis[row] = col;
  };

  // Runs simplex on the current tableau; `allowed` bounds the columns that
  // may enter. Returns false if an unbounded ray was found.
  const auto run = [&](int allowed) -> bool {
    Scalar best_obj = -d[n_total];
    while (true) {
      int enter = -1;
      if (bland) {
        for (int j = 0; j < allowed; ++j) {
          if (d[j] < -tolerance) {
            enter = j;
            break;
          }
        }
      } else {
        Scalar best = -tolerance;
        for (int j = 0; j < allowed; ++j) {
          if (d[j] < best) {
            best = d[j];
            enter = j;
          }
        }
      }
      if (enter < 0) return true;

      int leave = -1;
      Scalar best_ratio = std::numeric_limits<Scalar>::infinity();
      for (int i = 0; i < m; ++i) {
        if (t(i, enter) > pivot_eps) {
          const Scalar ratio = std::max(t(i, n_total), Scalar(0)) / t(i, enter);
          if (ratio < best_ratio - pivot_eps ||
              (ratio < best_ratio + pivot_eps &&
               (leave < 0 || basis[i] < basis[leave]))) {
            best_ratio = ratio;
            leave = i;
          }
        }
      }
      if (leave < 0) return false;

      pivot(leave, enter);
      if (++iterations > max_iter) throw LpIterationLimit("lp: pivot limit exceeded");

      const Scalar obj = -d[n_total];
      if (obj < best_obj - tolerance * (Scalar(1) + std::abs(static_cast<double>(best_obj)))) {
        best_obj = obj;
        stall = 0;
      } else if (!bland && ++stall > stall_limit) {
        bland = true;  // anti-cycling fallback
        stall = 0;
      }
    }
  };

  // Phase 1: minimize the sum of artificials.
  d.setZero();
  for (int j = 0; j < n_ext; ++j) d[j] = -t.col(j).sum();
  d[n_total] = -t.col(n_total).sum();
  if (!run(n_ext)) throw LpIterationLimit("lp: phase 1 ray (numerical failure)");

  const Scalar infeas = -d[n_total];
  if (infeas > tolerance * (Scalar(1) + b.template lpNorm<1>())) {
    out.status = LpStatus::Infeasible;
    out.iterations = iterations;
    return out;
  }

  // Remove artificials still in the basis: pivot them out where a usable
  // column exists, otherwise the row is redundant and is dropped.
  std::vector<char> keep(m, 1);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n_ext) continue;
    int best_col = -1;
    Scalar best_mag = Scalar(1e-8);
    for (int j = 0; j < n_ext; ++j) {
      if (std::abs(t(i, j)) > best_mag) {
        best_mag = std::abs(t(i, j));
        best_col = j;
      }
    }
    if (best_col >= 0) {
      pivot(i, best_col);
    } else {
      keep[i] = 0;
    }
  }
  {
    int kept = 0;
    for (int i = 0; i < m; ++i) {
      if (keep[i]) {
        if (kept != i) {
          t.row(kept) = t.row(i);
          basis[kept] = basis[i];
        }
        ++kept;
      }
    }
    if (kept != m) {
      m = kept;
      t.conservativeResize(m, Eigen::NoChange);
      basis.resize(m);
    }
  }

  // Phase 2 objective.
  d.setZero();
  for (int j = 0; j < n_ext; ++j) d[j] = problem.c[col_orig[j]] * col_sign[j];
  for (int i = 0; i < m; ++i) {
    const int bj = basis[i];
    const Scalar cb = bj < n_ext ? problem.c[col_orig[bj]] * col_sign[bj] : Scalar(0);
    if (cb != Scalar(0)) d -= cb * t.row(i);
  }
  for (int i = 0; i < m; ++i) d[basis[i]] = Scalar(0);

  if (!run(n_ext)) {
    out.status = LpStatus::Unbounded;
    out.iterations = iterations;
    return out;
  }

  // Re-solve the final basis against the original data; the tableau drifts
  // over many pivots and the callers check equality residuals tightly.
  VecS xb = t.col(n_total).head(m);
  {
    MatS bmat(m, m);
    VecS brhs(m);
    // Rows were compacted in order; recover their original indices.
    std::vector<int> rows;
    rows.reserve(m);
    for (int i = 0; i < m_orig; ++i) {
      if (keep[i]) rows.push_back(i);
    }
    if (static_cast<int>(rows.size()) == m) {
      for (int i = 0; i < m; ++i) {
        brhs[i] = b[rows[i]];
        for (int j = 0; j < m; ++j) {
          bmat(i, j) = basis[j] < n_ext ? a(rows[i], basis[j])
                                        : (rows[i] == basis[j] - n_ext ? Scalar(1) : Scalar(0));
        }
      }
      const VecS refined = bmat.colPivHouseholderQr().solve(brhs);
      if ((bmat * refined - brhs).cwiseAbs().maxCoeff() <
          tolerance * (Scalar(1) + brhs.cwiseAbs().maxCoeff())) {
        bool ok = true;
        for (int j = 0; j < m; ++j) {
          if (refined[j] < -Scalar(10) * tolerance) ok = false;
        }
        if (ok) xb = refined.cwiseMax(Scalar(0));
      }
    }
  }

  out.x = VecS::Zero(n_orig);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n_ext) out.x[col_orig[basis[i]]] += col_sign[basis[i]] * xb[i];
  }
  out.objective = problem.c.dot(out.x);
  out.status = LpStatus::Optimal;
  out.iterations = iterations;
  return out;
}

}  // namespace reactgrid
