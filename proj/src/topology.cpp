#include "reactgrid/topology.hpp"

#include <numeric>
#include <queue>

namespace reactgrid {

IndexSet all_nodes(const Grid& g) {
  IndexSet out(static_cast<std::size_t>(g.node_count()));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

IndexSet neighbors(const Grid& g, const IndexSet& s) {
  std::vector<int> out;
  for (int v : s) {
    for (int w : g.neighbors_of(v)) {
      if (!set_contains(s, w)) out.push_back(w);
    }
  }
  return make_set(std::move(out));
}

IndexSet interior(const Grid& g, const IndexSet& s) {
  IndexSet out;
  for (int v : s) {
    bool inside = true;
    for (int w : g.neighbors_of(v)) {
      if (!set_contains(s, w)) {
        inside = false;
        break;
      }
    }
    if (inside) out.push_back(v);
  }
  return out;
}

IndexSet boundary(const Grid& g, const IndexSet& s) {
  IndexSet out;
  for (int v : s) {
    for (int w : g.neighbors_of(v)) {
      if (!set_contains(s, w)) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

IndexSet closure(const Grid& g, const IndexSet& s) { return set_union(s, neighbors(g, s)); }

IndexSet induced_edges(const Grid& g, const IndexSet& s) {
  IndexSet out;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (set_contains(s, g.edge_tail(e)) && set_contains(s, g.edge_head(e))) out.push_back(e);
  }
  return out;
}

std::vector<IndexSet> connected_components(const Grid& g, const IndexSet& s) {
  std::vector<IndexSet> comps;
  std::vector<char> seen(g.node_count(), 0);
  for (int start : s) {
    if (seen[start]) continue;
    IndexSet comp;
    std::queue<int> q;
    q.push(start);
    seen[start] = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int w : g.neighbors_of(v)) {
        if (!seen[w] && set_contains(s, w)) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
    comps.push_back(make_set(std::move(comp)));
  }
  // BFS starts follow the sorted order of s, so components already come out
  // ordered by smallest member.
  return comps;
}

namespace {

// Kuhn's augmenting-path matching, right side saturated on success.
bool augment(int r, const std::vector<std::vector<int>>& adj, std::vector<int>& match_left,
             std::vector<char>& used) {
  for (int l : adj[r]) {
    if (used[l]) continue;
    used[l] = 1;
    if (match_left[l] < 0 || augment(match_left[l], adj, match_left, used)) {
      match_left[l] = r;
      return true;
    }
  }
  return false;
}

}  // namespace

bool has_covering_matching(const Grid& g, const IndexSet& left, const IndexSet& right) {
  if (right.empty()) return true;
  std::vector<int> left_pos(g.node_count(), -1);
  for (std::size_t i = 0; i < left.size(); ++i) left_pos[left[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> adj(right.size());
  for (std::size_t i = 0; i < right.size(); ++i) {
    for (int w : g.neighbors_of(right[i])) {
      if (left_pos[w] >= 0) adj[i].push_back(left_pos[w]);
    }
  }

  std::vector<int> match_left(left.size(), -1);
  for (std::size_t i = 0; i < right.size(); ++i) {
    std::vector<char> used(left.size(), 0);
    if (!augment(static_cast<int>(i), adj, match_left, used)) return false;
  }
  return true;
}

}  // namespace reactgrid
