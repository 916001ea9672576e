#include "doctest.h"
#include "iotasim/rng.hpp"

using namespace iotasim;

TEST_CASE("identical seed and split path give identical draws") {
  RngStream a = RngStream(42).split(rng_label::walk, 3, 17, 2);
  RngStream b = RngStream(42).split(rng_label::walk, 3, 17, 2);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("disjoint split paths give different streams") {
  RngStream a = RngStream(42).split(rng_label::walk, 3, 17, 2);
  RngStream b = RngStream(42).split(rng_label::walk, 3, 17, 3);
  RngStream c = RngStream(42).split(rng_label::query, 3, 17, 2);
  CHECK(a.next_u64() != b.next_u64());
  RngStream a2 = RngStream(42).split(rng_label::walk, 3, 17, 2);
  CHECK(a2.next_u64() != c.next_u64());
}

TEST_CASE("splitting does not perturb the parent stream") {
  RngStream a(7);
  RngStream b(7);
  (void)a.split(5);
  CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("uniform01 stays in [0,1)") {
  RngStream rng(123);
  for (int i = 0; i < 10000; ++i) {
    double u = rng.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("uniform_index covers the full range") {
  RngStream rng(9);
  bool hit[7] = {};
  for (int i = 0; i < 1000; ++i) hit[rng.uniform_index(7)] = true;
  for (bool h : hit) CHECK(h);
}
