#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "reactgrid/common.hpp"
#include "reactgrid/grid.hpp"
#include "reactgrid/rng.hpp"

namespace reactgrid {

enum class AttackKind { Distortion, Replay };

// Ground-truth description of a cyber-physical attack: the hidden area H,
// the failed lines inside it, and how the reported angles for H are faked.
// `param` is the distortion sigma or the replay perturbation scale; a
// negative value selects the built-in default (0.1 * |theta|_inf for
// distortion, 0.2 * |p_Hbar|_inf for replay).
struct AttackScenario {
  IndexSet h;         // node positions
  IndexSet failures;  // edge positions, subset of E_H
  AttackKind kind = AttackKind::Distortion;
  double param = -1.0;
  std::uint64_t seed = 0;
};

struct Observation {
  VecX theta_pre;   // pre-attack angles theta
  VecX theta_obs;   // observed angles theta*; equals the post-attack truth
                    // outside H, fabricated inside
  VecX p;           // injections as the control center knows them, A*theta
};

struct GroundTruth {
  VecX theta_post;  // actual post-attack angles theta'
  Grid grid_post;   // grid with the failed lines removed
  AttackScenario scenario;
};

// Removes the given edges; throws DisconnectsGrid if the removal splits the
// graph (the attack model assumes it never does).
Grid apply_line_failures(const Grid& grid, const IndexSet& failures);

// Fails the scenario's lines, re-solves the flow, and fabricates the
// observed angles for the attacked area:
//   distortion: theta*_H = theta'_H + z,  z iid Gaussian(0, sigma^2)
//   replay:     theta*_H = theta''_H where A theta'' = p'' on the original
//               grid, p''_H = p_H and p''_Hbar carries a zero-sum Gaussian
//               perturbation
// Outside H the observation equals the truth exactly. Identical (inputs,
// rng state) give a bit-identical result.
std::pair<Observation, GroundTruth> simulate_attack(const Grid& grid, const VecX& theta,
                                                    const AttackScenario& scenario, Rng& rng);

// Convenience overload seeding the generator from scenario.seed.
std::pair<Observation, GroundTruth> simulate_attack(const Grid& grid, const VecX& theta,
                                                    const AttackScenario& scenario);

// Complete bipartite grid encoding a 3-partition instance: k supply nodes at
// injection B against 3k demand nodes at -s_j, unit reactances. theta and
// theta_prime are chosen so that a failure set with A' theta' = p exists
// exactly when the instance is partitionable.
struct PartitionGadget {
  Grid grid;
  VecX theta;
  VecX theta_prime;
  IndexSet h;  // the whole node set; failures may hit any line
};

// `enforce_bounds` controls the (B/4, B/2) window check; the gadget itself
// is well formed for any positive elements summing to k*B, which lets test
// fixtures run deliberately out-of-window instances.
PartitionGadget gen_3partition_gadget(const std::vector<long long>& s, long long b,
                                      bool enforce_bounds = true);

// All k-subsets of the area's induced edges whose removal keeps the grid
// connected, or `sample_n` distinct uniform such subsets when there are more
// than sample_n candidates. May return fewer after the connectivity filter.
std::vector<IndexSet> enumerate_failure_sets(const Grid& grid, const IndexSet& area, int k,
                                             int sample_n, Rng& rng);

}  // namespace reactgrid
