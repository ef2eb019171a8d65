#include "reactgrid/grid.hpp"

#include <cmath>
#include <queue>

namespace reactgrid {

Grid Grid::create(std::vector<Node> nodes, std::vector<Edge> edges, int reference_id) {
  Grid g;
  g.nodes_ = std::move(nodes);
  g.edges_ = std::move(edges);

  if (g.nodes_.empty()) throw InvalidInput("grid has no nodes");

  for (std::size_t i = 0; i < g.nodes_.size(); ++i) {
    const Node& n = g.nodes_[i];
    if (n.id < 0) throw InvalidInput("negative node id " + std::to_string(n.id));
    if (!g.node_index_of_.emplace(n.id, static_cast<int>(i)).second)
      throw InvalidInput("duplicate node id " + std::to_string(n.id));
  }

  g.tail_.resize(g.edges_.size());
  g.head_.resize(g.edges_.size());
  g.incident_.assign(g.nodes_.size(), {});
  for (std::size_t e = 0; e < g.edges_.size(); ++e) {
    const Edge& ed = g.edges_[e];
    if (ed.id < 0) throw InvalidInput("negative edge id " + std::to_string(ed.id));
    if (!g.edge_index_of_.emplace(ed.id, static_cast<int>(e)).second)
      throw InvalidInput("duplicate edge id " + std::to_string(ed.id));
    if (!(ed.x > 0.0) || !std::isfinite(ed.x))
      throw InvalidInput("edge " + std::to_string(ed.id) + " has non-positive reactance");
    if (ed.u == ed.v) throw InvalidInput("edge " + std::to_string(ed.id) + " is a self loop");
    const auto iu = g.node_index_of_.find(ed.u);
    const auto iv = g.node_index_of_.find(ed.v);
    if (iu == g.node_index_of_.end() || iv == g.node_index_of_.end())
      throw InvalidInput("edge " + std::to_string(ed.id) + " references unknown node");
    // Fixed orientation, from the lower node id to the higher one.
    const bool forward = ed.u < ed.v;
    g.tail_[e] = forward ? iu->second : iv->second;
    g.head_[e] = forward ? iv->second : iu->second;
    g.incident_[g.tail_[e]].push_back(static_cast<int>(e));
    g.incident_[g.head_[e]].push_back(static_cast<int>(e));
  }

  g.neighbors_.assign(g.nodes_.size(), {});
  for (std::size_t v = 0; v < g.nodes_.size(); ++v) {
    std::vector<int> nb;
    for (int e : g.incident_[v]) {
      const int w = g.tail_[e] == static_cast<int>(v) ? g.head_[e] : g.tail_[e];
      nb.push_back(w);
    }
    g.neighbors_[v] = make_set(std::move(nb));
  }

  const auto iref = g.node_index_of_.find(reference_id);
  if (iref == g.node_index_of_.end())
    throw InvalidInput("reference node id " + std::to_string(reference_id) + " not in grid");
  g.reference_index_ = iref->second;

  g.injections_.resize(static_cast<Eigen::Index>(g.nodes_.size()));
  double total = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < g.nodes_.size(); ++i) {
    if (!std::isfinite(g.nodes_[i].p)) throw InvalidInput("non-finite injection");
    g.injections_[static_cast<Eigen::Index>(i)] = g.nodes_[i].p;
    total += g.nodes_[i].p;
    scale = std::max(scale, std::abs(g.nodes_[i].p));
  }
  if (std::abs(total) > tol::solve * std::max(1.0, scale) * g.node_count())
    throw InvalidInput("injections do not sum to zero (sum = " + std::to_string(total) + ")");

  if (!g.is_connected()) throw Disconnected("grid is not connected");
  return g;
}

int Grid::node_index(int id) const {
  const auto it = node_index_of_.find(id);
  if (it == node_index_of_.end()) throw InvalidInput("unknown node id " + std::to_string(id));
  return it->second;
}

int Grid::edge_index(int id) const {
  const auto it = edge_index_of_.find(id);
  if (it == edge_index_of_.end()) throw InvalidInput("unknown edge id " + std::to_string(id));
  return it->second;
}

bool Grid::connected_without(const IndexSet& edge_positions) const {
  if (nodes_.empty()) return true;
  std::vector<char> removed(edges_.size(), 0);
  for (int e : edge_positions) removed[e] = 1;
  std::vector<char> seen(nodes_.size(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int e : incident_[v]) {
      if (removed[e]) continue;
      const int w = tail_[e] == v ? head_[e] : tail_[e];
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push(w);
      }
    }
  }
  return count == node_count();
}

Grid Grid::without_edges(const IndexSet& edge_positions) const {
  std::vector<Edge> kept;
  kept.reserve(edges_.size() - edge_positions.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (!set_contains(edge_positions, static_cast<int>(e))) kept.push_back(edges_[e]);
  }
  return Grid::create(nodes_, std::move(kept), reference_id());
}

IndexSet Grid::node_ids_to_indices(const std::vector<int>& ids) const {
  std::vector<int> idx;
  idx.reserve(ids.size());
  for (int id : ids) idx.push_back(node_index(id));
  return make_set(std::move(idx));
}

std::vector<int> Grid::node_indices_to_ids(const IndexSet& idx) const {
  std::vector<int> ids;
  ids.reserve(idx.size());
  for (int i : idx) ids.push_back(node_id(i));
  return ids;
}

IndexSet Grid::edge_ids_to_indices(const std::vector<int>& ids) const {
  std::vector<int> idx;
  idx.reserve(ids.size());
  for (int id : ids) idx.push_back(edge_index(id));
  return make_set(std::move(idx));
}

std::vector<int> Grid::edge_indices_to_ids(const IndexSet& idx) const {
  std::vector<int> ids;
  ids.reserve(idx.size());
  for (int i : idx) ids.push_back(edge_id(i));
  return ids;
}

}  // namespace reactgrid
