#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace reactgrid {

template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VecX = Vec<double>;
using MatX = Mat<double>;

// A set of node or edge positions (0-based, dense), kept sorted and unique.
// External ids appear only at the JSON/CLI boundary.
using IndexSet = std::vector<int>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidInput : Error {
  using Error::Error;
};
struct SingularSystem : Error {
  using Error::Error;
};
struct Disconnected : Error {
  using Error::Error;
};
struct DisconnectsGrid : Error {
  using Error::Error;
};
struct MalformedInstance : Error {
  using Error::Error;
};
struct EmptyArea : Error {
  using Error::Error;
};
struct LpIterationLimit : Error {
  using Error::Error;
};
struct OutOfRange : Error {
  using Error::Error;
};

namespace tol {
// Absolute inf-norm residual accepted for A*theta = p.
inline constexpr double solve = 1e-8;
// Support threshold, relative to the inf-norm of the tested vector.
inline constexpr double supp_rel = 1e-6;
// Absolute floor for the support threshold; keeps pure round-off vectors
// (residuals of an unattacked system) out of every support set.
inline constexpr double supp_floor = 1e-12;
// LP feasibility and reduced-cost tolerance.
inline constexpr double lp = 1e-7;
// Relative residual bound that declares the area-refinement system feasible.
inline constexpr double feas = 1e-6;
// Confidence level treated as a successful detection (percent).
inline constexpr double confidence_success = 99.99;
}  // namespace tol

inline IndexSet make_set(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline bool set_contains(const IndexSet& s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline IndexSet set_minus(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline IndexSet set_intersect(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool set_subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Complement within {0, ..., n-1}.
inline IndexSet set_complement(const IndexSet& s, int n) {
  IndexSet out;
  out.reserve(static_cast<std::size_t>(n) - s.size());
  std::size_t j = 0;
  for (int i = 0; i < n; ++i) {
    if (j < s.size() && s[j] == i) {
      ++j;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

// supp(v) under an absolute threshold: { i : |v_i| > tol }.
inline IndexSet support(const VecX& v, double tolerance) {
  IndexSet out;
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > tolerance) out.push_back(i);
  }
  return out;
}

inline double support_threshold(const VecX& v, double rel = tol::supp_rel,
                                double floor = tol::supp_floor) {
  const double max_abs = v.size() > 0 ? v.cwiseAbs().maxCoeff() : 0.0;
  return std::max(floor, rel * max_abs);
}

// Support with the default relative threshold (floored).
inline IndexSet support_rel(const VecX& v, double rel = tol::supp_rel,
                            double floor = tol::supp_floor) {
  return support(v, support_threshold(v, rel, floor));
}

inline VecX subvector(const VecX& v, const IndexSet& idx) {
  VecX out(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[idx[i]];
  return out;
}

inline MatX submatrix(const MatX& a, const IndexSet& rows, const IndexSet& cols) {
  MatX out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(rows[i], cols[j]);
  return out;
}

}  // namespace reactgrid
