#ifndef IOTASIM_PRESETS_HPP
#define IOTASIM_PRESETS_HPP

#include <string>
#include <vector>

#include "iotasim/sweep.hpp"

namespace iotasim {

// Unknown preset id.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Sweep definitions for the reproduced experiment families
// (fig3-grid ... fig16). runs_per_point defaults to 100, master seed to 0;
// callers may override both.
SweepSpec figure_preset(const std::string& figure_id);

const std::vector<std::string>& preset_ids();

}  // namespace iotasim

#endif
