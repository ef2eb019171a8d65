#pragma once

#include <string>

#include "reactgrid/attack.hpp"
#include "reactgrid/common.hpp"
#include "reactgrid/detection.hpp"
#include "reactgrid/grid.hpp"

namespace reactgrid {

// File formats. All ids are the external node/edge ids.
//
// grid:        {"nodes":[{"id":int,"p":float},...],
//               "edges":[{"id":int,"u":int,"v":int,"x":float},...],
//               "reference":int}
// scenario:    {"H":[node ids],"F":[edge ids],
//               "kind":"distortion"|"replay","param":float,"seed":int}
// observation: {"nodes":[ids in grid order],"theta_pre":[...],
//               "theta_obs":[...],"p":[...]}
// truth:       {"scenario":{...},"theta_post":[...],"removed_edges":[ids]}
// outcome:     {"success":bool,"detected_H":[ids],"failures":[edge ids],
//               "area":[ids],"theta_recovered":[...],
//               "confidence":float,"iterations":int}

Grid grid_from_json_text(const std::string& text);
Grid load_grid(const std::string& path);
std::string grid_to_json_text(const Grid& grid);
void save_grid(const Grid& grid, const std::string& path);

AttackScenario scenario_from_json_text(const std::string& text, const Grid& grid);
AttackScenario load_scenario(const std::string& path, const Grid& grid);
std::string scenario_to_json_text(const AttackScenario& scenario, const Grid& grid);
void save_scenario(const AttackScenario& scenario, const Grid& grid, const std::string& path);

std::string observation_to_json_text(const Observation& obs, const Grid& grid);
void save_observation(const Observation& obs, const Grid& grid, const std::string& path);
Observation load_observation(const std::string& path, const Grid& grid);

std::string ground_truth_to_json_text(const GroundTruth& truth, const Grid& grid);
void save_ground_truth(const GroundTruth& truth, const Grid& grid, const std::string& path);

std::string outcome_to_json_text(const ReactOutcome& outcome, const Grid& grid);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace reactgrid
