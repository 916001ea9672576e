#include "iotasim/graph.hpp"

#include <algorithm>
#include <queue>

namespace iotasim {

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& nbrs : adjacency) total += nbrs.size();
  return total / 2;
}

bool Graph::is_connected() const {
  if (node_count <= 1) return true;
  std::vector<char> seen(node_count, 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int visited = 1;
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    for (int v : adjacency[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++visited;
        frontier.push(v);
      }
    }
  }
  return visited == node_count;
}

namespace {

void sort_adjacency(Graph& g) {
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
}

}  // namespace

Graph build_grid(int side) {
  if (side < 1) throw TopologyError("grid side must be >= 1");
  Graph g;
  g.node_count = side * side;
  g.adjacency.resize(g.node_count);
  auto id = [side](int r, int c) { return r * side + c; };
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      if (r + 1 < side) {
        g.adjacency[id(r, c)].push_back(id(r + 1, c));
        g.adjacency[id(r + 1, c)].push_back(id(r, c));
      }
      if (c + 1 < side) {
        g.adjacency[id(r, c)].push_back(id(r, c + 1));
        g.adjacency[id(r, c + 1)].push_back(id(r, c));
      }
    }
  }
  sort_adjacency(g);
  return g;
}

Graph build_torus(int side) {
  if (side < 3) throw TopologyError("torus side must be >= 3");
  Graph g;
  g.node_count = side * side;
  g.adjacency.resize(g.node_count);
  auto id = [side](int r, int c) { return r * side + c; };
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      int down = id((r + 1) % side, c);
      int right = id(r, (c + 1) % side);
      g.adjacency[id(r, c)].push_back(down);
      g.adjacency[down].push_back(id(r, c));
      g.adjacency[id(r, c)].push_back(right);
      g.adjacency[right].push_back(id(r, c));
    }
  }
  sort_adjacency(g);
  return g;
}

namespace {

bool contains(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

Graph watts_strogatz_attempt(int n, int k, double p_rewire, RngStream& rng) {
  Graph g;
  g.node_count = n;
  g.adjacency.resize(n);
  // Ring lattice: each node connects to the k/2 nearest on each side.
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= k / 2; ++j) {
      int other = (i + j) % n;
      g.adjacency[i].push_back(other);
      g.adjacency[other].push_back(i);
    }
  }
  // Rewire the far endpoint of each lattice edge in canonical order
  // (node index, then offset). An edge with no legal new endpoint stays.
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= k / 2; ++j) {
      if (!rng.bernoulli(p_rewire)) continue;
      int old_target = (i + j) % n;
      int candidates = 0;
      for (int v = 0; v < n; ++v) {
        if (v != i && v != old_target && !contains(g.adjacency[i], v)) ++candidates;
      }
      if (candidates == 0) continue;
      int pick = static_cast<int>(rng.uniform_index(static_cast<std::uint32_t>(candidates)));
      int new_target = -1;
      for (int v = 0; v < n; ++v) {
        if (v != i && v != old_target && !contains(g.adjacency[i], v)) {
          if (pick-- == 0) {
            new_target = v;
            break;
          }
        }
      }
      auto erase_edge = [](std::vector<int>& nbrs, int x) {
        nbrs.erase(std::find(nbrs.begin(), nbrs.end(), x));
      };
      erase_edge(g.adjacency[i], old_target);
      erase_edge(g.adjacency[old_target], i);
      g.adjacency[i].push_back(new_target);
      g.adjacency[new_target].push_back(i);
    }
  }
  sort_adjacency(g);
  return g;
}

}  // namespace

Graph build_watts_strogatz(int n, int k, double p_rewire, RngStream rng) {
  if (k < 2 || k % 2 != 0) throw TopologyError("watts-strogatz k must be even and >= 2");
  if (k >= n) throw TopologyError("watts-strogatz requires k < n");
  if (p_rewire < 0.0 || p_rewire > 1.0) throw TopologyError("p_rewire must be in [0,1]");
  constexpr int kMaxAttempts = 100;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    RngStream attempt_rng = rng.split(rng_label::ws_attempt, static_cast<std::uint64_t>(attempt));
    Graph g = watts_strogatz_attempt(n, k, p_rewire, attempt_rng);
    if (g.is_connected()) return g;
  }
  throw GenerationError("watts-strogatz: no connected sample within 100 attempts");
}

Graph build_topology(const TopologySpec& spec, RngStream rng) {
  switch (spec.kind) {
    case TopologyKind::Grid2D:
      return build_grid(spec.side);
    case TopologyKind::Torus:
      return build_torus(spec.side);
    case TopologyKind::WattsStrogatz:
      return build_watts_strogatz(spec.n, spec.k, spec.p_rewire, rng);
  }
  throw TopologyError("unknown topology kind");
}

const char* topology_kind_name(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::Grid2D: return "grid";
    case TopologyKind::Torus: return "torus";
    case TopologyKind::WattsStrogatz: return "ws";
  }
  return "?";
}

}  // namespace iotasim
