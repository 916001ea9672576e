#include "iotasim/cc.hpp"

#include <algorithm>

namespace iotasim {

Opinion cc_majority(std::span<const Opinion> opinions) {
  int zeros = 0;
  int ones = 0;
  for (Opinion o : opinions) {
    if (o == Opinion::Zero) ++zeros;
    if (o == Opinion::One) ++ones;
  }
  if (zeros > ones) return Opinion::Zero;
  if (ones > zeros) return Opinion::One;
  return Opinion::Undecided;
}

Heartbeat build_heartbeat(int node, const Graph& graph, const CcNodeState& state,
                          int round) {
  Heartbeat hb;
  hb.sender = node;
  hb.round = round;
  hb.own_opinion = state.opinion;
  for (int t : graph.neighbors(node)) {
    if (state.blacklist.contains(t)) continue;
    auto it = state.received_prev.find(t);
    if (it == state.received_prev.end()) continue;  // silent or no previous round
    hb.prior_claims.push_back({t, round - 1, it->second});
  }
  return hb;
}

namespace {

// Inserts one claim; returns true when it conflicts with a stored claim
// for the same (subject, round).
bool accept_claim(std::unordered_map<int, Opinion>& table, int subject, Opinion opinion) {
  auto [it, inserted] = table.try_emplace(subject, opinion);
  return !inserted && it->second != opinion;
}

}  // namespace

std::unordered_set<int> detect_and_blacklist(int node, CcNodeState& state,
                                             const std::vector<Heartbeat>& incoming) {
  std::unordered_set<int> newly;
  for (const Heartbeat& hb : incoming) {
    if (state.blacklist.contains(hb.sender)) continue;
    // The sender's statement about itself is a claim for the current round.
    if (accept_claim(state.claims_curr, hb.sender, hb.own_opinion)) {
      state.blacklist.insert(hb.sender);
      newly.insert(hb.sender);
      continue;  // a caught liar's relays are ignored as well
    }
    for (const OpinionClaim& claim : hb.prior_claims) {
      if (claim.subject == node) continue;  // never blacklist yourself
      if (state.blacklist.contains(claim.subject)) continue;
      auto& table = claim.round == hb.round ? state.claims_curr : state.claims_prev;
      if (accept_claim(table, claim.subject, claim.opinion)) {
        state.blacklist.insert(claim.subject);
        newly.insert(claim.subject);
      }
    }
  }
  return newly;
}

CcSimulation::CcSimulation(const Graph& graph, std::vector<NodeKind> roles,
                           AdversarySpec adv, const std::vector<Opinion>& initial,
                           RngStream run_rng)
    : graph_(graph),
      roles_(std::move(roles)),
      adv_(adv),
      run_rng_(run_rng),
      states_(graph.node_count) {
  for (int i = 0; i < graph.node_count; ++i) states_[i].opinion = initial[i];
}

void CcSimulation::step(int round_index) {
  const auto r = static_cast<std::uint64_t>(round_index);
  const int n = graph_.node_count;

  // Emission phase: every node builds its faithful heartbeat from the
  // pre-round snapshot; the adversary layer corrupts it per neighbor.
  // delivered[s][j] is what neighbor j of s receives (absent = silence).
  std::vector<Heartbeat> faithful(n);
  std::vector<std::vector<std::optional<Opinion>>> delivered(n);
  for (int s = 0; s < n; ++s) {
    faithful[s] = build_heartbeat(s, graph_, states_[s], round_index);
    NodeKind kind = roles_[s];
    bool lying = false;
    bool silent = false;
    if (kind == NodeKind::Cautious || kind == NodeKind::SemiCautious) {
      RngStream coin = run_rng_.split(rng_label::adv_coin, r, static_cast<std::uint64_t>(s));
      if (kind == NodeKind::Cautious) lying = coin.bernoulli(adv_.p_lying);
      if (kind == NodeKind::SemiCautious) silent = coin.bernoulli(adv_.p_silence);
    }
    const auto& nbrs = graph_.neighbors(s);
    delivered[s].resize(nbrs.size());
    for (std::size_t j = 0; j < nbrs.size(); ++j) {
      RngStream nbr_rng = run_rng_.split(rng_label::cc_emit, r,
                                         static_cast<std::uint64_t>(s),
                                         static_cast<std::uint64_t>(j));
      Emission e = emit_opinion(kind, faithful[s].own_opinion, adv_, lying, silent, nbr_rng);
      delivered[s][j] = e.silent ? std::nullopt : std::optional<Opinion>(e.reported);
    }
  }

  // Delivery and update phase: each node only touches its own state, so the
  // update is simultaneous with respect to the snapshot taken above.
  for (int i = 0; i < n; ++i) {
    CcNodeState& st = states_[i];
    std::vector<Heartbeat> incoming;
    for (int s : graph_.neighbors(i)) {
      const auto& s_nbrs = graph_.neighbors(s);
      auto pos = std::lower_bound(s_nbrs.begin(), s_nbrs.end(), i) - s_nbrs.begin();
      const auto& sent = delivered[s][static_cast<std::size_t>(pos)];
      if (!sent) continue;  // silent this round
      Heartbeat hb = faithful[s];
      hb.own_opinion = *sent;
      incoming.push_back(std::move(hb));
    }
    auto newly = detect_and_blacklist(i, st, incoming);
    blacklist_events_ += static_cast<int>(newly.size());

    std::vector<Opinion> votes;
    std::unordered_map<int, Opinion> received_now;
    for (const Heartbeat& hb : incoming) {
      if (st.blacklist.contains(hb.sender)) continue;
      votes.push_back(hb.own_opinion);
      received_now.emplace(hb.sender, hb.own_opinion);
    }
    if (!votes.empty()) st.opinion = cc_majority(votes);
    // zero usable heartbeats: keep the previous opinion
    st.received_prev = std::move(received_now);
    st.claims_prev = std::move(st.claims_curr);
    st.claims_curr.clear();
  }
}

std::vector<Opinion> CcSimulation::opinions() const {
  std::vector<Opinion> out(graph_.node_count);
  for (int i = 0; i < graph_.node_count; ++i) out[i] = states_[i].opinion;
  return out;
}

}  // namespace iotasim
