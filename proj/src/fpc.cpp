#include "iotasim/fpc.hpp"

#include <algorithm>

namespace iotasim {

double fpc_threshold(int round_index, const FpcParams& params, RngStream& rng) {
  if (round_index == 0) return params.tau;
  return rng.uniform(params.beta, 1.0 - params.beta);
}

Opinion fpc_decide(double mean, double threshold, Opinion previous, bool first_round) {
  if (first_round) return mean > threshold ? Opinion::One : Opinion::Zero;
  if (mean > threshold) return Opinion::One;
  if (mean < threshold) return Opinion::Zero;
  return previous;
}

std::optional<int> random_walk(const Graph& graph, int origin, int distance,
                               RngStream& rng, DeadEndPolicy policy,
                               std::vector<int>* trace) {
  int visited[64];  // walk_distance is small; trajectory length <= distance+1
  int visited_len = 0;
  auto seen = [&](int v) {
    for (int i = 0; i < visited_len; ++i)
      if (visited[i] == v) return true;
    return false;
  };
  visited[visited_len++] = origin;
  if (trace) *trace = {origin};

  int current = origin;
  int remaining = distance;
  while (remaining > 0) {
    int candidates[64];
    int candidate_count = 0;
    for (int v : graph.neighbors(current)) {
      if (!seen(v)) candidates[candidate_count < 64 ? candidate_count : 63] = v, ++candidate_count;
    }
    if (candidate_count == 0) {
      // Dead end: every neighbor already visited (or none exist).
      if (current == origin) return std::nullopt;
      return policy == DeadEndPolicy::StopAndQuery ? std::optional<int>(current)
                                                   : std::nullopt;
    }
    int next;
    if (candidate_count <= 64) {
      next = candidates[rng.uniform_index(static_cast<std::uint32_t>(candidate_count))];
    } else {
      // High-degree node: re-scan to find the picked unvisited neighbor.
      int pick = static_cast<int>(rng.uniform_index(static_cast<std::uint32_t>(candidate_count)));
      next = -1;
      for (int v : graph.neighbors(current)) {
        if (!seen(v) && pick-- == 0) {
          next = v;
          break;
        }
      }
    }
    current = next;
    if (visited_len < 64) visited[visited_len++] = current;
    if (trace) trace->push_back(current);
    --remaining;
  }
  return current;
}

std::vector<char> cautious_round_coins(int node_count, const std::vector<NodeKind>& roles,
                                       const AdversarySpec& adv, int round_index,
                                       const RngStream& run_rng) {
  std::vector<char> coins(node_count, 0);
  for (int i = 0; i < node_count; ++i) {
    if (roles[i] == NodeKind::Cautious || roles[i] == NodeKind::SemiCautious) {
      RngStream coin = run_rng.split(rng_label::adv_coin,
                                     static_cast<std::uint64_t>(round_index),
                                     static_cast<std::uint64_t>(i));
      double p = roles[i] == NodeKind::Cautious ? adv.p_lying : adv.p_silence;
      coins[i] = coin.bernoulli(p) ? 1 : 0;
    }
  }
  return coins;
}

Opinion fpc_node_update(const Graph& graph, const std::vector<Opinion>& snapshot,
                        const std::vector<NodeKind>& roles,
                        const std::vector<char>& lying_this_round,
                        const FpcParams& params, const AdversarySpec& adv,
                        int node, int round_index, const RngStream& run_rng,
                        DeadEndPolicy policy) {
  const auto r = static_cast<std::uint64_t>(round_index);
  const auto u_node = static_cast<std::uint64_t>(node);

  int received = 0;
  int ones = 0;
  for (int w = 0; w < params.query_count; ++w) {
    const auto u_w = static_cast<std::uint64_t>(w);
    RngStream walk_rng = run_rng.split(rng_label::walk, r, u_node, u_w);
    std::optional<int> endpoint =
        random_walk(graph, node, params.walk_distance, walk_rng, policy);
    if (!endpoint) continue;
    int responder = *endpoint;
    RngStream query_rng = run_rng.split(rng_label::query, r, u_node, u_w);
    std::optional<Opinion> response =
        respond_to_query(roles[responder], snapshot[responder], adv,
                         lying_this_round[responder] != 0, query_rng);
    if (!response) continue;
    ++received;
    if (*response == Opinion::One) ++ones;
  }
  if (received == 0) return snapshot[node];  // empty mean: keep opinion

  double mean = static_cast<double>(ones) / received;
  RngStream threshold_rng = run_rng.split(rng_label::threshold, r, u_node);
  double threshold = fpc_threshold(round_index, params, threshold_rng);
  return fpc_decide(mean, threshold, snapshot[node], round_index == 0);
}

std::vector<Opinion> fpc_round(const Graph& graph, const std::vector<Opinion>& snapshot,
                               const std::vector<NodeKind>& roles,
                               const FpcParams& params, const AdversarySpec& adv,
                               int round_index, const RngStream& run_rng,
                               DeadEndPolicy policy) {
  std::vector<char> coins =
      cautious_round_coins(graph.node_count, roles, adv, round_index, run_rng);
  std::vector<Opinion> next(graph.node_count);
  for (int i = 0; i < graph.node_count; ++i) {
    next[i] = fpc_node_update(graph, snapshot, roles, coins, params, adv, i,
                              round_index, run_rng, policy);
  }
  return next;
}

}  // namespace iotasim
