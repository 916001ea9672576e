#ifndef IOTASIM_OPINION_HPP
#define IOTASIM_OPINION_HPP

#include <cstdint>

namespace iotasim {

// Binary vote, plus the temporary third state used by cellular consensus
// when a neighborhood vote ties.
enum class Opinion : std::int8_t {
  Undecided = -1,
  Zero = 0,
  One = 1,
};

inline bool is_binary(Opinion o) { return o != Opinion::Undecided; }

inline Opinion flipped(Opinion o) {
  if (o == Opinion::Zero) return Opinion::One;
  if (o == Opinion::One) return Opinion::Zero;
  return Opinion::Undecided;
}

}  // namespace iotasim

#endif
