#pragma once

#include <vector>

#include "reactgrid/common.hpp"
#include "reactgrid/grid.hpp"

namespace reactgrid {

// Subgraph operators over node-position sets.
//   N(S)   = nodes outside S with a neighbor in S
//   int(S) = nodes of S whose whole neighborhood lies in S
//   d(S)   = nodes of S with a neighbor outside S      (so int + d partition S)
//   cl(S)  = S together with N(S)

IndexSet all_nodes(const Grid& g);

IndexSet neighbors(const Grid& g, const IndexSet& s);
IndexSet interior(const Grid& g, const IndexSet& s);
IndexSet boundary(const Grid& g, const IndexSet& s);
IndexSet closure(const Grid& g, const IndexSet& s);

// Edge positions with both endpoints in s (the induced edge set E_S).
IndexSet induced_edges(const Grid& g, const IndexSet& s);

// Maximal connected pieces of the subgraph induced by s, each sorted,
// ordered by their smallest member.
std::vector<IndexSet> connected_components(const Grid& g, const IndexSet& s);

// True iff the bipartite graph of grid edges between `left` and `right`
// admits a matching that saturates `right`.
bool has_covering_matching(const Grid& g, const IndexSet& left, const IndexSet& right);

}  // namespace reactgrid
