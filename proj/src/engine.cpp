#include "iotasim/engine.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace iotasim {

std::vector<Opinion> assign_initial_opinions(int n, double p0, RngStream rng) {
  std::vector<Opinion> opinions(n);
  for (int i = 0; i < n; ++i) {
    opinions[i] = rng.bernoulli(p0) ? Opinion::Zero : Opinion::One;
  }
  return opinions;
}

RunResult run(const RunSpec& spec) {
  RngStream root(spec.seed);
  Graph graph = build_topology(spec.topology, root.split(rng_label::topology));
  std::vector<NodeKind> roles =
      place_adversaries(graph.node_count, spec.adversary, root.split(rng_label::roles));
  std::vector<Opinion> opinions =
      assign_initial_opinions(graph.node_count, spec.p0, root.split(rng_label::init));

  const int rounds = spec.rounds();
  RunResult result;
  if (spec.protocol == Protocol::Fpc) {
    for (int r = 0; r < rounds; ++r) {
      opinions = fpc_round(graph, opinions, roles, spec.fpc, spec.adversary, r, root,
                           spec.dead_end_walk);
    }
  } else {
    CcSimulation sim(graph, roles, spec.adversary, opinions, root);
    for (int r = 1; r <= rounds; ++r) sim.step(r);
    opinions = sim.opinions();
    result.blacklist_events = sim.blacklist_events();
  }
  result.rounds_executed = rounds;

  int scoped = 0;
  for (int i = 0; i < graph.node_count; ++i) {
    if (spec.consensus_scope == ConsensusScope::Honest && roles[i] != NodeKind::Honest)
      continue;
    ++scoped;
    switch (opinions[i]) {
      case Opinion::Zero: ++result.zeros; break;
      case Opinion::One: ++result.ones; break;
      case Opinion::Undecided: ++result.undecided; break;
    }
  }
  result.converged = result.undecided == 0 &&
                     (result.zeros == scoped || result.ones == scoped) && scoped > 0;
  return result;
}

double wilson_half_width(int converged, int runs) {
  if (runs <= 0) return 0.0;
  constexpr double z = 1.959963984540054;  // 95%
  const double n = runs;
  const double p = static_cast<double>(converged) / n;
  const double z2 = z * z;
  const double half = (z / (1.0 + z2 / n)) * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  return half;
}

std::uint64_t derive_run_seed(std::uint64_t master_seed, std::uint64_t point_index,
                              std::uint64_t run_index) {
  RngStream s = RngStream(master_seed)
                    .split(rng_label::point, point_index)
                    .split(rng_label::run, run_index);
  return s.next_u64();
}

RateEstimate convergence_rate(const RunSpec& base, int run_count,
                              std::uint64_t master_seed, int workers) {
  std::vector<char> converged(run_count, 0);
  auto job = [&](int idx) {
    RunSpec spec = base;
    spec.seed = derive_run_seed(master_seed, 0, static_cast<std::uint64_t>(idx));
    converged[idx] = run(spec).converged ? 1 : 0;
  };
  if (workers <= 1) {
    for (int i = 0; i < run_count; ++i) job(i);
  } else {
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int i = next.fetch_add(1); i < run_count; i = next.fetch_add(1)) {
          try {
            job(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
            return;
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }
  RateEstimate est;
  est.runs = run_count;
  for (char c : converged) est.converged += c;
  est.rate = run_count > 0 ? static_cast<double>(est.converged) / run_count : 0.0;
  est.ci95_half_width = wilson_half_width(est.converged, est.runs);
  return est;
}

const char* protocol_name(Protocol p) {
  return p == Protocol::Fpc ? "fpc" : "cc";
}

}  // namespace iotasim
