#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reactgrid/rng.hpp"

namespace reactgrid {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Property suites behind the `verify` CLI subcommand. Each returns one
// result per checked property; a failing entry carries the observed values.

// Flow conservation and solver residuals on random connected grids.
std::vector<CheckResult> verify_flow_laws(int grids, Rng& rng);

// Support identities of the two attack types (interior of the complement
// under distortion, the two boundaries under replay) plus candidate
// containment, on random planted scenarios.
std::vector<CheckResult> verify_containment(int trials, Rng& rng);

// Monte-Carlo check of the exponential-weight ordering probability against
// its closed form, for every k of each m in [m_min, m_max].
std::vector<CheckResult> verify_weight_probability(int m_min, int m_max, int trials, Rng& rng);

// Cycle-area detectability: unit weights succeed below half the cycle,
// randomized weights succeed above it within the predicted iteration count.
std::vector<CheckResult> verify_cycle_detection(int trials, Rng& rng);

}  // namespace reactgrid
