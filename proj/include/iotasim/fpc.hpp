#ifndef IOTASIM_FPC_HPP
#define IOTASIM_FPC_HPP

#include <optional>
#include <vector>

#include "iotasim/adversary.hpp"
#include "iotasim/graph.hpp"
#include "iotasim/opinion.hpp"
#include "iotasim/rng.hpp"

namespace iotasim {

struct FpcParams {
  int walk_distance = 4;  // D
  int query_count = 10;   // Q, walks launched per round
  double tau = 0.5;       // first-round threshold
  double beta = 0.25;     // uniform-law half-margin, < 0.5
  int rounds = 30;        // M
};

// What to do when a walk dead-ends before spending its hop budget.
enum class DeadEndPolicy : std::uint8_t {
  StopAndQuery,  // the current node is queried
  Abort,         // the walk yields no query
};

// Round 0 returns tau exactly; later rounds draw uniformly in
// [beta, 1-beta] from the caller's stream (one draw per node per round,
// no common randomness across nodes).
double fpc_threshold(int round_index, const FpcParams& params, RngStream& rng);

// First round: mean > threshold -> 1, otherwise (including equality) -> 0.
// Later rounds: strict comparison, equality keeps the previous opinion.
Opinion fpc_decide(double mean, double threshold, Opinion previous, bool first_round);

// Self-avoiding random walk of the given hop budget; each hop is chosen
// uniformly among unvisited neighbors. Returns the endpoint, which is never
// the origin. Absent when the origin has no neighbors, or on a dead end
// under DeadEndPolicy::Abort. `trace` (optional) receives the visited list.
std::optional<int> random_walk(const Graph& graph, int origin, int distance,
                               RngStream& rng,
                               DeadEndPolicy policy = DeadEndPolicy::StopAndQuery,
                               std::vector<int>* trace = nullptr);

// One node's update for one round, reading only the pre-round snapshot.
// `lying_this_round` holds the per-round Cautious coins for every node.
// Pure given run_rng: safe to evaluate nodes in any order or in parallel.
Opinion fpc_node_update(const Graph& graph, const std::vector<Opinion>& snapshot,
                        const std::vector<NodeKind>& roles,
                        const std::vector<char>& lying_this_round,
                        const FpcParams& params, const AdversarySpec& adv,
                        int node, int round_index, const RngStream& run_rng,
                        DeadEndPolicy policy);

// Simultaneous update of all nodes from the pre-round snapshot.
std::vector<Opinion> fpc_round(const Graph& graph, const std::vector<Opinion>& snapshot,
                               const std::vector<NodeKind>& roles,
                               const FpcParams& params, const AdversarySpec& adv,
                               int round_index, const RngStream& run_rng,
                               DeadEndPolicy policy = DeadEndPolicy::StopAndQuery);

// Per-round Cautious lying coins, one per node (meaningful for adversaries).
std::vector<char> cautious_round_coins(int node_count, const std::vector<NodeKind>& roles,
                                       const AdversarySpec& adv, int round_index,
                                       const RngStream& run_rng);

}  // namespace iotasim

#endif
