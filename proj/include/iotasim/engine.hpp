#ifndef IOTASIM_ENGINE_HPP
#define IOTASIM_ENGINE_HPP

#include <cstdint>
#include <vector>

#include "iotasim/adversary.hpp"
#include "iotasim/cc.hpp"
#include "iotasim/fpc.hpp"
#include "iotasim/graph.hpp"
#include "iotasim/opinion.hpp"
#include "iotasim/rng.hpp"

namespace iotasim {

enum class Protocol : std::uint8_t { Fpc, Cc };

// Which nodes the consensus predicate quantifies over. Adversary "opinions"
// are behavioral fictions, so the default is honest nodes only.
enum class ConsensusScope : std::uint8_t { Honest, All };

struct RunSpec {
  TopologySpec topology;
  Protocol protocol = Protocol::Fpc;
  FpcParams fpc;
  CcParams cc;
  double p0 = 0.5;  // probability a node starts at opinion 0
  AdversarySpec adversary;
  std::uint64_t seed = 0;
  DeadEndPolicy dead_end_walk = DeadEndPolicy::StopAndQuery;
  ConsensusScope consensus_scope = ConsensusScope::Honest;

  int rounds() const { return protocol == Protocol::Fpc ? fpc.rounds : cc.rounds; }
};

struct RunResult {
  bool converged = false;
  int zeros = 0;  // final histogram over the consensus scope
  int ones = 0;
  int undecided = 0;
  int rounds_executed = 0;
  int blacklist_events = 0;  // CC only, 0 for FPC
};

struct RateEstimate {
  int runs = 0;
  int converged = 0;
  double rate = 0.0;
  double ci95_half_width = 0.0;  // Wilson score interval
};

// Each node independently gets opinion 0 with probability p0, else 1.
std::vector<Opinion> assign_initial_opinions(int n, double p0, RngStream rng);

// Builds the topology, places adversaries, assigns opinions, executes
// exactly M rounds (no early stopping) and evaluates the consensus
// predicate. Fully determined by the spec including its seed.
RunResult run(const RunSpec& spec);

// Converged fraction over run_count independent runs with seeds derived
// from master_seed; order-invariant, so runs may execute in parallel.
RateEstimate convergence_rate(const RunSpec& base, int run_count,
                              std::uint64_t master_seed, int workers = 1);

double wilson_half_width(int converged, int runs);

// Derived per-run seed; also used by the sweep harness.
std::uint64_t derive_run_seed(std::uint64_t master_seed, std::uint64_t point_index,
                              std::uint64_t run_index);

const char* protocol_name(Protocol p);

}  // namespace iotasim

#endif
