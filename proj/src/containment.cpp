#include "reactgrid/containment.hpp"

#include <numeric>

#include "reactgrid/power_flow.hpp"
#include "reactgrid/topology.hpp"

namespace reactgrid {

IndexSet compute_s0(const MatX& a, const VecX& p, const VecX& theta_star, double tol_supp) {
  if (a.rows() != p.size() || a.cols() != theta_star.size())
    throw InvalidInput("compute_s0: dimension mismatch");
  return support(a * theta_star - p, tol_supp);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<CandidateArea> candidate_areas(const Grid& grid, const IndexSet& s0) {
  std::vector<CandidateArea> out;
  out.push_back({s0, CandidateArea::Origin::DistortionHypothesis, -1, 0});

  const IndexSet rest = set_complement(s0, grid.node_count());
  const std::vector<IndexSet> comps = connected_components(grid, rest);
  if (comps.empty()) return out;

  // Components sharing a neighbor (necessarily a node of S0) belong to the
  // same side of the attack; merge them to a fixpoint.
  std::vector<int> comp_of(grid.node_count(), -1);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
  }
  UnionFind uf(static_cast<int>(comps.size()));
  for (int t : s0) {
    int first = -1;
    for (int w : grid.neighbors_of(t)) {
      const int c = comp_of[w];
      if (c < 0) continue;
      if (first < 0) {
        first = c;
      } else {
        uf.unite(first, c);
      }
    }
  }

  std::vector<IndexSet> groups;
  std::vector<int> group_of(comps.size(), -1);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const int root = uf.find(static_cast<int>(c));
    if (group_of[root] < 0) {
      group_of[root] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    IndexSet& g = groups[group_of[root]];
    g = set_union(g, comps[c]);
  }

  // Largest excluded group first; ties by smallest member for determinism.
  std::vector<int> order(groups.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (groups[x].size() != groups[y].size()) return groups[x].size() > groups[y].size();
    return groups[x].front() < groups[y].front();
  });

  int rank = 1;
  for (int gi : order) {
    CandidateArea cand;
    cand.nodes = set_complement(groups[gi], grid.node_count());
    cand.origin = CandidateArea::Origin::ReplayHypothesis;
    cand.excluded_component = gi;
    cand.rank = rank;
    // Skip duplicates of an earlier candidate (the degenerate S0 = empty
    // case produces the empty complement twice).
    bool dup = false;
    for (const CandidateArea& prev : out) {
      if (prev.nodes == cand.nodes) {
        dup = true;
        break;
      }
    }
    if (dup) continue;
    out.push_back(std::move(cand));
    ++rank;
  }
  return out;
}

std::optional<RefinedArea> refine_area(const Grid& grid, const VecX& theta, const VecX& theta_star,
                                       const CandidateArea& candidate, double tol_supp_rel) {
  const int n = grid.node_count();
  if (theta.size() != n || theta_star.size() != n)
    throw InvalidInput("refine_area: phase vector length mismatch");

  RefinedArea refined;
  refined.pre_refinement = interior(grid, candidate.nodes);
  const IndexSet& sa = refined.pre_refinement;
  const IndexSet outside = set_complement(sa, n);

  if (outside.empty()) {
    // Nothing observed outside the area; the system is vacuous and carries
    // no information, so the refinement is skipped.
    refined.nodes = sa;
    refined.y = subvector(theta_star, sa);
    return refined;
  }

  const MatX a = admittance_matrix(grid);
  const MatX a_bs = submatrix(a, outside, sa);
  const VecX rhs = submatrix(a, outside, outside) *
                       (subvector(theta, outside) - subvector(theta_star, outside)) +
                   a_bs * subvector(theta, sa);

  VecX y;
  double residual;
  if (sa.empty()) {
    y = VecX();
    residual = rhs.norm();
  } else {
    y = a_bs.completeOrthogonalDecomposition().solve(rhs);
    residual = (a_bs * y - rhs).norm();
  }
  if (residual > tol::feas * (1.0 + rhs.norm())) return std::nullopt;

  refined.y = y;
  const VecX diff = y - subvector(theta_star, sa);
  const IndexSet local = support_rel(diff, tol_supp_rel);
  refined.nodes.reserve(local.size());
  for (int i : local) refined.nodes.push_back(sa[i]);
  return refined;
}

bool check_exactness_conditions(const Grid& grid, const IndexSet& s, const IndexSet& h) {
  if (!set_subset(h, s)) throw InvalidInput("check_exactness_conditions: H must lie inside S");
  const IndexSet bs = boundary(grid, s);
  if (!set_subset(set_minus(s, h), bs)) return false;
  return has_covering_matching(grid, set_complement(s, grid.node_count()), bs);
}

}  // namespace reactgrid
