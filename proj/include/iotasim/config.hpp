#ifndef IOTASIM_CONFIG_HPP
#define IOTASIM_CONFIG_HPP

#include <string>

#include "iotasim/presets.hpp"
#include "iotasim/sweep.hpp"

namespace iotasim {

// Builds a SweepSpec from flat key=value settings. Keys mirror the CSV
// column names (protocol, topology, side, n, k, p_rewire, rounds,
// adversary_kind, adversary_fraction, p_lying, p_silence, p0) plus
// runs, seed, name, walk_distance, query_count, tau, beta,
// dead_end_walk and consensus_scope.
//
// A comma-separated value for an axis-capable key (topology, side, n, k,
// rounds, adversary_kind, adversary_fraction, p0) declares a sweep axis;
// axes enumerate in the order the keys were first set, last one fastest.
class SpecBuilder {
public:
  SpecBuilder() = default;
  explicit SpecBuilder(SweepSpec initial) : spec_(std::move(initial)) {}

  // Throws UsageError on unknown keys or malformed values.
  void set(const std::string& key, const std::string& value);

  // Parses "key=value" lines; '#' starts a comment.
  void load_file(const std::string& path);
  void load_text(const std::string& text);

  // Range and topology precondition checks over every grid point.
  // Throws UsageError describing the first violation.
  void validate() const;

  const SweepSpec& spec() const { return spec_; }
  SweepSpec& spec() { return spec_; }

private:
  void set_axis_or_base(AxisParam param, const std::string& value);
  SweepSpec spec_;
};

}  // namespace iotasim

#endif
