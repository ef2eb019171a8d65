#pragma once

#include <string>

#include "reactgrid/grid.hpp"

namespace reactgrid {

// Minimal MATPOWER-style case reader: picks up the mpc.bus, mpc.gen and
// mpc.branch matrices of a .m case file. Net injection per bus is the sum
// of its generators' PG minus its PD; the system imbalance is absorbed by
// the reference bus (the first bus of type 3, falling back to the first
// bus). Out-of-service branches (status column 0) are skipped. Parse errors
// carry the offending line number.
Grid grid_from_matpower_text(const std::string& text);
Grid load_matpower(const std::string& path);

}  // namespace reactgrid
