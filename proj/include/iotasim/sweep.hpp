#ifndef IOTASIM_SWEEP_HPP
#define IOTASIM_SWEEP_HPP

#include <string>
#include <variant>
#include <vector>

#include "iotasim/engine.hpp"

namespace iotasim {

// Parameters a sweep axis may vary.
enum class AxisParam : std::uint8_t {
  P0,
  Side,    // grid/torus side; for Watts-Strogatz resolves to n = side^2
  N,       // Watts-Strogatz node count
  K,
  Rounds,
  AdversaryFraction,
  AdversaryKind,
  Topology,  // lets one sweep cover grid, torus and Watts-Strogatz
};

using AxisValue = std::variant<double, NodeKind, TopologyKind>;

struct SweepAxis {
  AxisParam param;
  std::vector<AxisValue> values;
};

struct SweepSpec {
  std::string name;
  RunSpec base;
  std::vector<SweepAxis> axes;  // last axis varies fastest
  int runs_per_point = 100;
  std::uint64_t master_seed = 0;
};

struct SweepRow {
  RunSpec spec;  // fully resolved parameters for this grid point
  int runs = 0;
  int converged = 0;
  double rate = 0.0;
  double ci95 = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // grid-enumeration order
};

std::size_t sweep_point_count(const SweepSpec& spec);

// Resolved RunSpec for one grid point (seed left untouched).
RunSpec resolve_point(const SweepSpec& spec, std::size_t point_index);

// Evaluates every grid point; per-run seeds derive from
// (master_seed, point index, run index), so the result is bit-identical
// at any worker count. Topology generation failures are reported with the
// offending point prefixed to the message.
SweepResult run_sweep(const SweepSpec& spec, int workers = 1);

// CSV with the fixed column set; floating-point fields use 6 decimals,
// absent parameters are empty fields.
std::string to_csv(const SweepResult& result);
void write_csv(const SweepResult& result, const std::string& path);

std::string csv_header();
std::string csv_row(const SweepRow& row);

}  // namespace iotasim

#endif
