#ifndef IOTASIM_RNG_HPP
#define IOTASIM_RNG_HPP

#include <cstdint>

namespace iotasim {

// Stream purposes. Every random decision in a run draws from a stream
// addressed by (purpose, round, node, ...) so that results do not depend
// on evaluation order or worker count.
namespace rng_label {
inline constexpr std::uint64_t topology = 1;
inline constexpr std::uint64_t roles = 2;
inline constexpr std::uint64_t init = 3;
inline constexpr std::uint64_t threshold = 4;
inline constexpr std::uint64_t walk = 5;
inline constexpr std::uint64_t query = 6;
inline constexpr std::uint64_t adv_coin = 7;
inline constexpr std::uint64_t cc_emit = 8;
inline constexpr std::uint64_t point = 9;
inline constexpr std::uint64_t run = 10;
inline constexpr std::uint64_t ws_attempt = 11;
}  // namespace rng_label

// Counter-based deterministic stream (splitmix64 core). split() derives an
// independent child stream from a label; identical seed and split path give
// identical draws, disjoint paths give independent streams.
class RngStream {
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

public:
  explicit RngStream(std::uint64_t seed) : key_(mix(seed + kGolden)) {}

  RngStream split(std::uint64_t label) const {
    RngStream child(0);
    child.key_ = mix(key_ + kGolden + mix(label + kGolden));
    child.counter_ = 0;
    return child;
  }
  RngStream split(std::uint64_t a, std::uint64_t b) const { return split(a).split(b); }
  RngStream split(std::uint64_t a, std::uint64_t b, std::uint64_t c) const {
    return split(a).split(b).split(c);
  }
  RngStream split(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) const {
    return split(a).split(b).split(c).split(d);
  }

  std::uint64_t next_u64() {
    counter_ += kGolden;
    return mix(key_ + counter_);
  }

  // Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  bool bernoulli(double p) { return uniform01() < p; }

  // Uniform index in [0, n). Lemire reduction; n must be > 0.
  std::uint32_t uniform_index(std::uint32_t n) {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace iotasim

#endif
