#ifndef IOTASIM_ADVERSARY_HPP
#define IOTASIM_ADVERSARY_HPP

#include <optional>
#include <vector>

#include "iotasim/opinion.hpp"
#include "iotasim/rng.hpp"

namespace iotasim {

enum class NodeKind : std::uint8_t { Honest, Cautious, SemiCautious, Berserk };

struct AdversarySpec {
  NodeKind kind = NodeKind::Honest;
  double p_lying = 0.5;    // Cautious / Berserk
  double p_silence = 0.5;  // SemiCautious
  double fraction = 0.0;   // share of network nodes with this kind
};

const char* node_kind_name(NodeKind kind);

// Response to one FPC query. `lying_this_round` is the responder's
// per-round coin (Cautious lies identically to every querier in a round);
// `query_rng` drives the per-query Berserk/SemiCautious decisions and is
// owned by the querier so results cannot depend on processing order.
// Absent means silence.
std::optional<Opinion> respond_to_query(NodeKind kind, Opinion true_opinion,
                                        const AdversarySpec& spec,
                                        bool lying_this_round,
                                        RngStream& query_rng);

// CC heartbeat emission toward one neighbor: possibly silent, possibly a
// flipped own_opinion. Relayed prior claims are never falsified (signature
// abstraction), so only the reported own opinion is subject to corruption.
struct Emission {
  bool silent = false;
  Opinion reported = Opinion::Undecided;
};

// `silent_this_round` / `lying_this_round` are the sender's per-round coins;
// `neighbor_rng` drives the per-neighbor Berserk flip.
Emission emit_opinion(NodeKind kind, Opinion true_opinion, const AdversarySpec& spec,
                      bool lying_this_round, bool silent_this_round,
                      RngStream& neighbor_rng);

// Exactly round-half-up(fraction * n) nodes drawn uniformly without
// replacement get the adversary kind; the rest are honest.
std::vector<NodeKind> place_adversaries(int n, const AdversarySpec& spec, RngStream rng);

}  // namespace iotasim

#endif
