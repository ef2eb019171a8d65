#include "reactgrid/synth.hpp"

#include <numeric>

#include "reactgrid/power_flow.hpp"
#include "reactgrid/topology.hpp"

namespace reactgrid {

namespace {

std::vector<Node> balanced_nodes(int n, double scale, Rng& rng) {
  std::vector<double> u(n);
  double mean = 0.0;
  for (int i = 0; i < n; ++i) {
    u[i] = scale * (2.0 * rng.uniform() - 1.0);
    mean += u[i];
  }
  mean /= n;
  std::vector<Node> nodes(n);
  for (int i = 0; i < n; ++i) nodes[i] = {i, u[i] - mean};
  return nodes;
}

double random_reactance(Rng& rng) { return 0.05 + 0.5 * rng.uniform(); }

}  // namespace

Grid random_connected_grid(int n, int extra_edges, Rng& rng) {
  if (n < 2) throw InvalidInput("random_connected_grid: need at least 2 nodes");
  std::vector<Edge> edges;
  int eid = 0;
  for (int i = 1; i < n; ++i) {
    edges.push_back({eid++, rng.uniform_int(0, i - 1), i, random_reactance(rng)});
  }
  for (int k = 0; k < extra_edges; ++k) {
    const int u = rng.uniform_int(0, n - 1);
    int v = rng.uniform_int(0, n - 2);
    if (v >= u) ++v;
    edges.push_back({eid++, u, v, random_reactance(rng)});
  }
  return Grid::create(balanced_nodes(n, 1.0, rng), std::move(edges), 0);
}

IndexSet random_connected_area(const Grid& grid, int size, Rng& rng) {
  const int n = grid.node_count();
  if (size < 1 || size > n) throw InvalidInput("random_connected_area: bad size");
  std::vector<char> in(n, 0);
  std::vector<int> frontier;
  const int start = rng.uniform_int(0, n - 1);
  in[start] = 1;
  IndexSet area{start};
  for (int w : grid.neighbors_of(start)) frontier.push_back(w);
  while (static_cast<int>(area.size()) < size && !frontier.empty()) {
    const int pick = rng.uniform_int(0, static_cast<int>(frontier.size()) - 1);
    const int v = frontier[pick];
    frontier.erase(frontier.begin() + pick);
    if (in[v]) continue;
    in[v] = 1;
    area.push_back(v);
    for (int w : grid.neighbors_of(v)) {
      if (!in[w]) frontier.push_back(w);
    }
  }
  return make_set(std::move(area));
}

PlantedCase planted_exactness_case(int h_nodes, int h_extra_edges, int ring_size, Rng& rng) {
  if (h_nodes < 2 || ring_size < 3) throw InvalidInput("planted_exactness_case: bad sizes");
  const int pend0 = h_nodes;            // one pendant per area node
  const int ring0 = 2 * h_nodes;        // far ring after the pendants
  const int n = 2 * h_nodes + ring_size;

  std::vector<Edge> edges;
  int eid = 0;
  // Area spanning tree plus chords.
  for (int i = 1; i < h_nodes; ++i)
    edges.push_back({eid++, rng.uniform_int(0, i - 1), i, random_reactance(rng)});
  for (int k = 0; k < h_extra_edges; ++k) {
    const int u = rng.uniform_int(0, h_nodes - 1);
    int v = rng.uniform_int(0, h_nodes - 2);
    if (v >= u) ++v;
    edges.push_back({eid++, u, v, random_reactance(rng)});
  }
  // Pendants: match area node i with outside node pend0+i, and give every
  // pendant a far neighbor so the closure's interior shrinks back to H.
  for (int i = 0; i < h_nodes; ++i) {
    edges.push_back({eid++, i, pend0 + i, random_reactance(rng)});
    edges.push_back({eid++, pend0 + i, ring0 + rng.uniform_int(0, ring_size - 1),
                     random_reactance(rng)});
  }
  for (int i = 0; i < ring_size; ++i) {
    edges.push_back({eid++, ring0 + i, ring0 + (i + 1) % ring_size, random_reactance(rng)});
  }

  PlantedCase out;
  out.grid = Grid::create(balanced_nodes(n, 1.0, rng), std::move(edges), ring0);
  out.area.resize(h_nodes);
  std::iota(out.area.begin(), out.area.end(), 0);
  return out;
}

PlantedCase prism_case(int m, Rng& rng) {
  if (m < 3) throw InvalidInput("prism_case: need a cycle of at least 3");
  std::vector<Edge> edges;
  int eid = 0;
  for (int i = 0; i < m; ++i) edges.push_back({eid++, i, (i + 1) % m, random_reactance(rng)});
  for (int i = 0; i < m; ++i)
    edges.push_back({eid++, m + i, m + (i + 1) % m, random_reactance(rng)});
  for (int i = 0; i < m; ++i) edges.push_back({eid++, i, m + i, random_reactance(rng)});

  PlantedCase out;
  out.grid = Grid::create(balanced_nodes(2 * m, 1.0, rng), std::move(edges), m);
  out.area.resize(m);
  std::iota(out.area.begin(), out.area.end(), 0);
  return out;
}

PlantedCase desk_case(std::uint64_t seed) {
  // Study area: 15 nodes, 16 edges (an 8-cycle with a chord, two trees
  // hanging off it), ids 0..14.
  const int area_nodes = 15;
  const std::vector<std::pair<int, int>> area_edges = {
      {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0},  // ring
      {1, 4},                                                          // chord
      {2, 8}, {8, 9}, {9, 10},                                         // branch
      {5, 11}, {11, 12},                                               // branch
      {9, 13}, {0, 14}};                                               // leaves
  // Boundary ties into the rest of the system.
  const std::vector<int> attach_area = {0, 3, 6, 8, 10, 12, 13};

  const int n = 300;
  const int outside0 = area_nodes;
  const int n_outside = n - area_nodes;

  for (int attempt = 0; attempt < 64; ++attempt) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    std::vector<Edge> edges;
    int eid = 0;
    for (const auto& [u, v] : area_edges) edges.push_back({eid++, u, v, random_reactance(rng)});

    // Outside system: spanning tree plus chords, roughly transmission-like
    // sparsity.
    for (int i = 1; i < n_outside; ++i) {
      edges.push_back({eid++, outside0 + rng.uniform_int(0, i - 1), outside0 + i,
                       random_reactance(rng)});
    }
    const int extra = 110;
    for (int k = 0; k < extra; ++k) {
      const int u = rng.uniform_int(0, n_outside - 1);
      int v = rng.uniform_int(0, n_outside - 2);
      if (v >= u) ++v;
      edges.push_back({eid++, outside0 + u, outside0 + v, random_reactance(rng)});
    }
    // Attachments: distinct outside anchors, one per listed boundary node.
    std::vector<int> anchors;
    for (int a : attach_area) {
      int pick;
      bool fresh;
      do {
        pick = outside0 + rng.uniform_int(0, n_outside - 1);
        fresh = true;
        for (int x : anchors) fresh = fresh && x != pick;
      } while (!fresh);
      anchors.push_back(pick);
      edges.push_back({eid++, a, pick, random_reactance(rng)});
    }

    Grid grid = Grid::create(balanced_nodes(n, 1.2, rng), std::move(edges), outside0);
    IndexSet area(area_nodes);
    std::iota(area.begin(), area.end(), 0);

    // The containment path needs the closure's interior to come back to the
    // area itself: every anchor must keep a neighbor outside the closure.
    const IndexSet cl = closure(grid, area);
    if (interior(grid, cl) != area) continue;
    // Keep pre-attack flows on area lines clearly nonzero so single failed
    // lines stay observable.
    const VecX theta = solve_dc_power_flow(grid, grid.injections());
    const VecX flows = line_flows(grid, theta);
    bool ok = true;
    for (int e : induced_edges(grid, area)) ok = ok && std::abs(flows[e]) > 0.03;
    if (!ok) continue;

    return {std::move(grid), std::move(area)};
  }
  throw Error("desk_case: no admissible instance found");
}

PartitionInstance yes_3partition_instance(int k, Rng& rng) {
  if (k < 1) throw InvalidInput("yes_3partition_instance: k must be positive");
  PartitionInstance inst;
  inst.yes = true;
  inst.b = 36 + 4 * rng.uniform_int(0, 6);
  for (int i = 0; i < k; ++i) {
    long long a, c, d;
    do {
      a = inst.b / 4 + 1 + rng.uniform_int(0, static_cast<int>(inst.b / 4) - 2);
      c = inst.b / 4 + 1 + rng.uniform_int(0, static_cast<int>(inst.b / 4) - 2);
      d = inst.b - a - c;
    } while (!(4 * d > inst.b && 2 * d < inst.b));
    inst.s.push_back(a);
    inst.s.push_back(c);
    inst.s.push_back(d);
  }
  return inst;
}

PartitionInstance no_3partition_instance(int q, Rng& rng) {
  if (q < 3) throw InvalidInput("no_3partition_instance: q must be at least 3");
  // B = 12q + 4 is 1 mod 3; elements live on 3q + 4 + 3*step with
  // step <= q - 1, all 1 mod 3 and strictly inside (B/4, B/2).
  PartitionInstance inst;
  inst.yes = false;
  inst.b = 12LL * q + 4;
  std::vector<int> steps(9, 0);
  int budget = 3 * q - 8;  // total steps so the nine elements sum to 3B
  while (budget > 0) {
    const int i = rng.uniform_int(0, 8);
    if (steps[i] < q - 1) {
      ++steps[i];
      --budget;
    }
  }
  for (int i = 0; i < 9; ++i) inst.s.push_back(3LL * q + 4 + 3LL * steps[i]);
  return inst;
}

}  // namespace reactgrid
