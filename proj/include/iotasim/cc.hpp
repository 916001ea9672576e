#ifndef IOTASIM_CC_HPP
#define IOTASIM_CC_HPP

#include <optional>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "iotasim/adversary.hpp"
#include "iotasim/graph.hpp"
#include "iotasim/opinion.hpp"
#include "iotasim/rng.hpp"

namespace iotasim {

struct CcParams {
  int rounds = 30;  // M
};

// Tri-state neighborhood majority. Undecided entries are abstentions:
// strictly more zeros -> Zero, strictly more ones -> One, tie or no
// countable votes -> Undecided.
Opinion cc_majority(std::span<const Opinion> opinions);

// Signed statement "subject held `opinion` in `round`". Provenance is
// trusted metadata: relays cannot forge it, only the subject itself can
// equivocate by signing different values for the same round.
struct OpinionClaim {
  int subject;
  int round;
  Opinion opinion;
};

struct Heartbeat {
  int sender;
  int round;
  Opinion own_opinion;
  std::vector<OpinionClaim> prior_claims;  // sender's neighbors at round-1
};

// Per-node CC state. claims_prev / claims_curr hold accepted claims about
// rounds r-1 and r, keyed by subject; older rounds can no longer conflict
// with anything and are dropped at the round boundary.
struct CcNodeState {
  Opinion opinion = Opinion::Zero;
  std::unordered_set<int> blacklist;
  std::unordered_map<int, Opinion> claims_prev;
  std::unordered_map<int, Opinion> claims_curr;
  std::unordered_map<int, Opinion> received_prev;  // neighbor -> opinion heard last round
};

// Faithful heartbeat an honest node would emit: its current opinion plus
// the opinions it received from its non-blacklisted neighbors last round.
Heartbeat build_heartbeat(int node, const Graph& graph, const CcNodeState& state, int round);

// Processes this round's incoming heartbeats against the claim store and
// returns the subjects newly blacklisted by `state`. Heartbeats from
// already-blacklisted senders are ignored entirely; a node never
// blacklists itself.
std::unordered_set<int> detect_and_blacklist(int node, CcNodeState& state,
                                             const std::vector<Heartbeat>& incoming);

// Full simulation state for one CC run.
class CcSimulation {
public:
  CcSimulation(const Graph& graph, std::vector<NodeKind> roles, AdversarySpec adv,
               const std::vector<Opinion>& initial, RngStream run_rng);

  // Executes round `round_index` (>= 1; round 0 opinions come from
  // initialization). Heartbeats are emitted from the pre-round snapshot and
  // all nodes update simultaneously.
  void step(int round_index);

  std::vector<Opinion> opinions() const;
  const CcNodeState& state(int node) const { return states_[node]; }
  int blacklist_events() const { return blacklist_events_; }

private:
  const Graph& graph_;
  std::vector<NodeKind> roles_;
  AdversarySpec adv_;
  RngStream run_rng_;
  std::vector<CcNodeState> states_;
  int blacklist_events_ = 0;
};

}  // namespace iotasim

#endif
