#pragma once

#include <unordered_map>
#include <vector>

#include "reactgrid/common.hpp"

namespace reactgrid {

struct Node {
  int id = 0;
  double p = 0.0;  // active power injection; > 0 supply, < 0 demand
};

struct Edge {
  int id = 0;
  int u = 0;  // endpoint node ids as given
  int v = 0;
  double x = 0.0;  // reactance, strictly positive
};

// Immutable power grid graph. Node/edge ids are arbitrary unique non-negative
// integers; all numeric work uses dense positions in the stored order.
// Invariants enforced at construction: positive reactances, no self loops,
// connected graph, injections summing to zero. Parallel edges are kept as
// distinct records.
class Grid {
 public:
  Grid() = default;

  static Grid create(std::vector<Node> nodes, std::vector<Edge> edges, int reference_id);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }

  int reference() const { return reference_index_; }
  int reference_id() const { return nodes_[reference_index_].id; }

  int node_index(int id) const;
  int node_id(int index) const { return nodes_[index].id; }
  int edge_index(int id) const;
  int edge_id(int index) const { return edges_[index].id; }

  double injection(int v) const { return nodes_[v].p; }
  const VecX& injections() const { return injections_; }

  double reactance(int e) const { return edges_[e].x; }

  // Stored orientation: tail is the endpoint with the smaller node id.
  int edge_tail(int e) const { return tail_[e]; }
  int edge_head(int e) const { return head_[e]; }

  // Edge positions incident to a node position.
  const std::vector<int>& incident_edges(int v) const { return incident_[v]; }
  // Unique neighbor node positions, sorted.
  const std::vector<int>& neighbors_of(int v) const { return neighbors_[v]; }

  // Copy of the grid without the given edge positions. The result is
  // revalidated; throws Disconnected if the removal splits the graph.
  Grid without_edges(const IndexSet& edge_positions) const;

  bool connected_without(const IndexSet& edge_positions) const;
  bool is_connected() const { return connected_without({}); }

  IndexSet node_ids_to_indices(const std::vector<int>& ids) const;
  std::vector<int> node_indices_to_ids(const IndexSet& idx) const;
  IndexSet edge_ids_to_indices(const std::vector<int>& ids) const;
  std::vector<int> edge_indices_to_ids(const IndexSet& idx) const;

 private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  int reference_index_ = 0;
  VecX injections_;
  std::vector<int> tail_, head_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::vector<int>> neighbors_;
  std::unordered_map<int, int> node_index_of_;
  std::unordered_map<int, int> edge_index_of_;
};

}  // namespace reactgrid
