#pragma once

#include <cstdint>

#include "reactgrid/common.hpp"
#include "reactgrid/grid.hpp"
#include "reactgrid/rng.hpp"

namespace reactgrid {

// Synthetic grids for experiments and property checks. Everything here is
// deterministic in the supplied generator.

// Random connected grid: spanning tree plus `extra_edges` random chords,
// reactances in [0.05, 0.55], balanced random injections, reference node 0.
Grid random_connected_grid(int n, int extra_edges, Rng& rng);

// Connected node set of the requested size, grown by randomized BFS.
IndexSet random_connected_area(const Grid& grid, int size, Rng& rng);

struct PlantedCase {
  Grid grid;
  IndexSet area;  // node positions of the planted attack area H
};

// Area H with one dedicated outside neighbor per H node (so a matching from
// outside covers H) where each of those neighbors also reaches a far ring
// (so int(cl(H)) comes back to H exactly). Satisfies the exact-recovery
// conditions by construction.
PlantedCase planted_exactness_case(int h_nodes, int h_extra_edges, int ring_size, Rng& rng);

// Prism: H is an m-cycle, every cycle node matched to a node of a disjoint
// outer m-cycle. The covering-matching condition of the cycle detectability
// results holds, and no removal of H edges can disconnect the grid.
PlantedCase prism_case(int m, Rng& rng);

// Transmission-system-scale case (300 buses) with a bundled 15-node,
// 16-edge study area wired so that containment recovers it exactly under
// distortion attacks. Deterministic in `seed`.
PlantedCase desk_case(std::uint64_t seed);

// 3-partition instances for the hardness-gadget suites, with all elements
// strictly inside (B/4, B/2).
struct PartitionInstance {
  std::vector<long long> s;
  long long b = 0;
  bool yes = false;
};

// Partitionable by construction (k triples with equal sums).
PartitionInstance yes_3partition_instance(int k, Rng& rng);
// Unpartitionable by a congruence argument: every element is 1 mod 3, so
// any 3 elements sum to 0 mod 3, while B is 1 mod 3; the size window forces
// parts of exactly 3 elements.
PartitionInstance no_3partition_instance(int q, Rng& rng);

}  // namespace reactgrid
