#include "reactgrid/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace reactgrid {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << content;
}

namespace {

json parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string(what) + ": " + e.what());
  }
}

std::vector<int> int_list(const json& j, const char* key) {
  std::vector<int> out;
  for (const auto& v : j.at(key)) out.push_back(v.get<int>());
  return out;
}

VecX vec_field(const json& j, const char* key, Eigen::Index n) {
  const auto& arr = j.at(key);
  if (static_cast<Eigen::Index>(arr.size()) != n)
    throw InvalidInput(std::string("field ") + key + " has wrong length");
  VecX out(n);
  Eigen::Index i = 0;
  for (const auto& v : arr) out[i++] = v.get<double>();
  return out;
}

json vec_to_json(const VecX& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

}  // namespace

Grid grid_from_json_text(const std::string& text) {
  const json j = parse(text, "grid");
  try {
    std::vector<Node> nodes;
    for (const auto& n : j.at("nodes")) nodes.push_back({n.at("id").get<int>(), n.at("p").get<double>()});
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges"))
      edges.push_back({e.at("id").get<int>(), e.at("u").get<int>(), e.at("v").get<int>(),
                       e.at("x").get<double>()});
    return Grid::create(std::move(nodes), std::move(edges), j.at("reference").get<int>());
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("grid: ") + e.what());
  }
}

Grid load_grid(const std::string& path) { return grid_from_json_text(read_text_file(path)); }

std::string grid_to_json_text(const Grid& grid) {
  json j;
  j["nodes"] = json::array();
  for (const Node& n : grid.nodes()) j["nodes"].push_back({{"id", n.id}, {"p", n.p}});
  j["edges"] = json::array();
  for (const Edge& e : grid.edges())
    j["edges"].push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}, {"x", e.x}});
  j["reference"] = grid.reference_id();
  return j.dump(2) + "\n";
}

void save_grid(const Grid& grid, const std::string& path) {
  write_text_file(path, grid_to_json_text(grid));
}

AttackScenario scenario_from_json_text(const std::string& text, const Grid& grid) {
  const json j = parse(text, "scenario");
  try {
    AttackScenario s;
    s.h = grid.node_ids_to_indices(int_list(j, "H"));
    s.failures = grid.edge_ids_to_indices(int_list(j, "F"));
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "distortion") {
      s.kind = AttackKind::Distortion;
    } else if (kind == "replay") {
      s.kind = AttackKind::Replay;
    } else {
      throw InvalidInput("scenario: unknown kind '" + kind + "'");
    }
    s.param = j.at("param").get<double>();
    s.seed = j.at("seed").get<std::uint64_t>();
    return s;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("scenario: ") + e.what());
  }
}

AttackScenario load_scenario(const std::string& path, const Grid& grid) {
  return scenario_from_json_text(read_text_file(path), grid);
}

std::string scenario_to_json_text(const AttackScenario& scenario, const Grid& grid) {
  json j;
  j["H"] = grid.node_indices_to_ids(scenario.h);
  j["F"] = grid.edge_indices_to_ids(scenario.failures);
  j["kind"] = scenario.kind == AttackKind::Distortion ? "distortion" : "replay";
  j["param"] = scenario.param;
  j["seed"] = scenario.seed;
  return j.dump(2) + "\n";
}

void save_scenario(const AttackScenario& scenario, const Grid& grid, const std::string& path) {
  write_text_file(path, scenario_to_json_text(scenario, grid));
}

std::string observation_to_json_text(const Observation& obs, const Grid& grid) {
  json j;
  std::vector<int> ids;
  for (const Node& n : grid.nodes()) ids.push_back(n.id);
  j["nodes"] = ids;
  j["theta_pre"] = vec_to_json(obs.theta_pre);
  j["theta_obs"] = vec_to_json(obs.theta_obs);
  j["p"] = vec_to_json(obs.p);
  return j.dump(2) + "\n";
}

void save_observation(const Observation& obs, const Grid& grid, const std::string& path) {
  write_text_file(path, observation_to_json_text(obs, grid));
}

Observation load_observation(const std::string& path, const Grid& grid) {
  const json j = parse(read_text_file(path), "observation");
  try {
    const std::vector<int> ids = int_list(j, "nodes");
    if (static_cast<int>(ids.size()) != grid.node_count())
      throw InvalidInput("observation: node list does not match grid");
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (ids[i] != grid.node_id(static_cast<int>(i)))
        throw InvalidInput("observation: node order does not match grid");
    }
    Observation obs;
    obs.theta_pre = vec_field(j, "theta_pre", grid.node_count());
    obs.theta_obs = vec_field(j, "theta_obs", grid.node_count());
    obs.p = vec_field(j, "p", grid.node_count());
    return obs;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("observation: ") + e.what());
  }
}

std::string ground_truth_to_json_text(const GroundTruth& truth, const Grid& grid) {
  json j;
  j["scenario"] = json::parse(scenario_to_json_text(truth.scenario, grid));
  j["theta_post"] = vec_to_json(truth.theta_post);
  j["removed_edges"] = grid.edge_indices_to_ids(truth.scenario.failures);
  return j.dump(2) + "\n";
}

void save_ground_truth(const GroundTruth& truth, const Grid& grid, const std::string& path) {
  write_text_file(path, ground_truth_to_json_text(truth, grid));
}

std::string outcome_to_json_text(const ReactOutcome& outcome, const Grid& grid) {
  json j;
  j["success"] = outcome.success;
  j["detected_H"] = grid.node_indices_to_ids(outcome.detected_h);
  j["failures"] = grid.edge_indices_to_ids(outcome.result.failed_edges);
  j["area"] = grid.node_indices_to_ids(outcome.result.area);
  j["theta_recovered"] = vec_to_json(outcome.result.theta_recovered);
  j["confidence"] = outcome.result.confidence;
  j["iterations"] = outcome.result.iterations;
  return j.dump(2) + "\n";
}

}  // namespace reactgrid
