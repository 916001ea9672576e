#include <cmath>

#include "doctest.h"
#include "iotasim/adversary.hpp"

using namespace iotasim;

TEST_CASE("honest responder always returns the true opinion") {
  AdversarySpec spec;
  RngStream rng(1);
  for (int i = 0; i < 50; ++i) {
    auto r = respond_to_query(NodeKind::Honest, Opinion::Zero, spec, false, rng);
    REQUIRE(r.has_value());
    CHECK(*r == Opinion::Zero);
  }
}

TEST_CASE("cautious lying round flips every query identically") {
  AdversarySpec spec;
  spec.kind = NodeKind::Cautious;
  RngStream rng(2);
  for (int q = 0; q < 3; ++q) {
    auto r = respond_to_query(NodeKind::Cautious, Opinion::Zero, spec, true, rng);
    REQUIRE(r.has_value());
    CHECK(*r == Opinion::One);
  }
  for (int q = 0; q < 3; ++q) {
    auto r = respond_to_query(NodeKind::Cautious, Opinion::Zero, spec, false, rng);
    REQUIRE(r.has_value());
    CHECK(*r == Opinion::Zero);
  }
}

TEST_CASE("semi-cautious never emits a false opinion") {
  AdversarySpec spec;
  spec.kind = NodeKind::SemiCautious;
  spec.p_silence = 0.5;
  RngStream rng(3);
  int silent = 0;
  for (int i = 0; i < 2000; ++i) {
    auto r = respond_to_query(NodeKind::SemiCautious, Opinion::One, spec, false, rng);
    if (!r) {
      ++silent;
    } else {
      CHECK(*r == Opinion::One);
    }
  }
  CHECK(silent > 800);
  CHECK(silent < 1200);
}

TEST_CASE("semi-cautious with p_silence=1 is always silent") {
  AdversarySpec spec;
  spec.kind = NodeKind::SemiCautious;
  spec.p_silence = 1.0;
  RngStream rng(4);
  for (int i = 0; i < 20; ++i) {
    CHECK_FALSE(respond_to_query(NodeKind::SemiCautious, Opinion::One, spec, false, rng));
  }
}

TEST_CASE("berserk mixes responses within a round") {
  AdversarySpec spec;
  spec.kind = NodeKind::Berserk;
  spec.p_lying = 0.5;
  RngStream rng(5);
  int zeros = 0;
  int ones = 0;
  for (int i = 0; i < 200; ++i) {
    auto r = respond_to_query(NodeKind::Berserk, Opinion::Zero, spec, false, rng);
    REQUIRE(r.has_value());
    (*r == Opinion::Zero ? zeros : ones) += 1;
  }
  CHECK(zeros > 0);
  CHECK(ones > 0);
}

TEST_CASE("p_lying=0 makes cautious and berserk behave honestly") {
  AdversarySpec spec;
  spec.p_lying = 0.0;
  for (int i = 0; i < 100; ++i) {
    RngStream a(77 + i);
    RngStream b(77 + i);
    RngStream c(77 + i);
    auto honest = respond_to_query(NodeKind::Honest, Opinion::One, spec, false, a);
    auto cautious = respond_to_query(NodeKind::Cautious, Opinion::One, spec, false, b);
    auto berserk = respond_to_query(NodeKind::Berserk, Opinion::One, spec, false, c);
    CHECK(honest == cautious);
    CHECK(honest == berserk);
  }
}

TEST_CASE("berserk and cautious lie at the same long-run rate") {
  // The expected fraction of lying responses approaches p_lying for both
  // kinds; check both within 3 standard errors of a binomial.
  AdversarySpec spec;
  spec.p_lying = 0.5;
  const int rounds = 2000;
  const int queries_per_round = 10;
  const int total = rounds * queries_per_round;

  int berserk_lies = 0;
  RngStream berserk_rng(11);
  for (int i = 0; i < total; ++i) {
    auto r = respond_to_query(NodeKind::Berserk, Opinion::Zero, spec, false, berserk_rng);
    if (*r == Opinion::One) ++berserk_lies;
  }

  int cautious_lies = 0;
  RngStream coin_rng(12);
  RngStream cautious_rng(13);
  for (int r = 0; r < rounds; ++r) {
    bool lying = coin_rng.bernoulli(spec.p_lying);
    for (int q = 0; q < queries_per_round; ++q) {
      auto resp = respond_to_query(NodeKind::Cautious, Opinion::Zero, spec, lying, cautious_rng);
      if (*resp == Opinion::One) ++cautious_lies;
    }
  }

  double se_berserk = std::sqrt(total * 0.25);
  // Cautious lies arrive in per-round blocks of Q, so its deviation scales
  // with the round count, not the query count.
  double se_cautious = queries_per_round * std::sqrt(rounds * 0.25);
  CHECK(std::abs(berserk_lies - total * 0.5) <= 3 * se_berserk);
  CHECK(std::abs(cautious_lies - total * 0.5) <= 3 * se_cautious);
}

TEST_CASE("cautious heartbeat lie is identical for every neighbor") {
  AdversarySpec spec;
  spec.kind = NodeKind::Cautious;
  RngStream rng(6);
  for (int j = 0; j < 4; ++j) {
    RngStream nbr = rng.split(j);
    Emission e = emit_opinion(NodeKind::Cautious, Opinion::One, spec, true, false, nbr);
    CHECK_FALSE(e.silent);
    CHECK(e.reported == Opinion::Zero);
  }
}

TEST_CASE("semi-cautious silent round emits nothing") {
  AdversarySpec spec;
  spec.kind = NodeKind::SemiCautious;
  RngStream rng(7);
  Emission e = emit_opinion(NodeKind::SemiCautious, Opinion::One, spec, false, true, rng);
  CHECK(e.silent);
}

TEST_CASE("place_adversaries counts") {
  AdversarySpec spec;
  spec.kind = NodeKind::Cautious;

  SUBCASE("fraction 0 -> all honest") {
    spec.fraction = 0.0;
    auto roles = place_adversaries(225, spec, RngStream(1));
    for (auto r : roles) CHECK(r == NodeKind::Honest);
  }
  SUBCASE("fraction 1/3 of 225 -> 75 adversaries") {
    spec.fraction = 1.0 / 3.0;
    auto roles = place_adversaries(225, spec, RngStream(2));
    int count = 0;
    for (auto r : roles) count += r == NodeKind::Cautious;
    CHECK(count == 75);
  }
  SUBCASE("fraction 0.5 of 225 -> 113 (round half up)") {
    spec.fraction = 0.5;
    auto roles = place_adversaries(225, spec, RngStream(3));
    int count = 0;
    for (auto r : roles) count += r == NodeKind::Cautious;
    CHECK(count == 113);
  }
}

TEST_CASE("place_adversaries is deterministic and seed-sensitive") {
  AdversarySpec spec;
  spec.kind = NodeKind::Berserk;
  spec.fraction = 0.3;
  auto a = place_adversaries(100, spec, RngStream(5));
  auto b = place_adversaries(100, spec, RngStream(5));
  auto c = place_adversaries(100, spec, RngStream(6));
  CHECK(a == b);
  CHECK(a != c);
}
