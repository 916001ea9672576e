#include "iotasim/adversary.hpp"

#include <cmath>
#include <numeric>

namespace iotasim {

const char* node_kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::Honest: return "honest";
    case NodeKind::Cautious: return "cautious";
    case NodeKind::SemiCautious: return "semicautious";
    case NodeKind::Berserk: return "berserk";
  }
  return "?";
}

std::optional<Opinion> respond_to_query(NodeKind kind, Opinion true_opinion,
                                        const AdversarySpec& spec,
                                        bool lying_this_round,
                                        RngStream& query_rng) {
  switch (kind) {
    case NodeKind::Honest:
      return true_opinion;
    case NodeKind::Cautious:
      return lying_this_round ? flipped(true_opinion) : true_opinion;
    case NodeKind::SemiCautious:
      if (query_rng.bernoulli(spec.p_silence)) return std::nullopt;
      return true_opinion;
    case NodeKind::Berserk:
      return query_rng.bernoulli(spec.p_lying) ? flipped(true_opinion) : true_opinion;
  }
  return true_opinion;
}

Emission emit_opinion(NodeKind kind, Opinion true_opinion, const AdversarySpec& spec,
                      bool lying_this_round, bool silent_this_round,
                      RngStream& neighbor_rng) {
  Emission out;
  switch (kind) {
    case NodeKind::Honest:
      out.reported = true_opinion;
      break;
    case NodeKind::Cautious:
      out.reported = lying_this_round ? flipped(true_opinion) : true_opinion;
      break;
    case NodeKind::SemiCautious:
      if (silent_this_round) {
        out.silent = true;
      } else {
        out.reported = true_opinion;
      }
      break;
    case NodeKind::Berserk:
      out.reported =
          neighbor_rng.bernoulli(spec.p_lying) ? flipped(true_opinion) : true_opinion;
      break;
  }
  return out;
}

std::vector<NodeKind> place_adversaries(int n, const AdversarySpec& spec, RngStream rng) {
  std::vector<NodeKind> roles(n, NodeKind::Honest);
  if (spec.kind == NodeKind::Honest || spec.fraction <= 0.0) return roles;
  int count = static_cast<int>(std::floor(spec.fraction * n + 0.5));
  if (count > n) count = n;
  // Partial Fisher-Yates over node indices.
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  for (int i = 0; i < count; ++i) {
    int j = i + static_cast<int>(rng.uniform_index(static_cast<std::uint32_t>(n - i)));
    std::swap(ids[i], ids[j]);
    roles[ids[i]] = spec.kind;
  }
  return roles;
}

}  // namespace iotasim
