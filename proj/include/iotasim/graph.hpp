#ifndef IOTASIM_GRAPH_HPP
#define IOTASIM_GRAPH_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "iotasim/rng.hpp"

namespace iotasim {

// Invalid topology parameters (bad side, odd k, k >= n, ...).
struct TopologyError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Random generation could not satisfy the topology invariants
// (connectivity retry budget exhausted).
struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Undirected graph as per-node sorted neighbor lists. Immutable once built.
struct Graph {
  int node_count = 0;
  std::vector<std::vector<int>> adjacency;

  const std::vector<int>& neighbors(int node) const { return adjacency[node]; }
  int degree(int node) const { return static_cast<int>(adjacency[node].size()); }
  std::size_t edge_count() const;
  bool is_connected() const;
};

enum class TopologyKind : std::uint8_t { Grid2D, Torus, WattsStrogatz };

struct TopologySpec {
  TopologyKind kind = TopologyKind::Torus;
  int side = 15;          // Grid2D / Torus; N = side * side
  int n = 225;            // WattsStrogatz node count
  int k = 10;             // WattsStrogatz mean degree (even)
  double p_rewire = 1.0;  // WattsStrogatz rewiring probability

  int node_count() const {
    return kind == TopologyKind::WattsStrogatz ? n : side * side;
  }
};

// Grid of side*side nodes at row-major indices, 4-neighborhood.
Graph build_grid(int side);

// Grid with wraparound edges; every node has degree 4. side >= 3.
Graph build_torus(int side);

// Ring lattice of degree k with each lattice edge rewired with probability
// p_rewire. Regenerates with derived sub-seeds until connected (100 tries).
Graph build_watts_strogatz(int n, int k, double p_rewire, RngStream rng);

Graph build_topology(const TopologySpec& spec, RngStream rng);

const char* topology_kind_name(TopologyKind kind);

}  // namespace iotasim

#endif
