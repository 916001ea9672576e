#include "iotasim/presets.hpp"

namespace iotasim {

namespace {

std::vector<AxisValue> p0_grid() {
  std::vector<AxisValue> values;
  for (int i = 0; i <= 20; ++i) values.push_back(i * 0.05);
  return values;
}

std::vector<AxisValue> nums(std::initializer_list<double> xs) {
  return {xs.begin(), xs.end()};
}

const std::vector<AxisValue> kSizes = nums({7, 10, 15, 22, 32});  // N = 49 ... 1024
const std::vector<AxisValue> kWsSizes = nums({49, 100, 225, 484, 1024});
const std::vector<AxisValue> kFractions = nums({0.1, 0.2, 0.3, 0.4, 0.5});
const std::vector<AxisValue> kRoundCounts = nums({10, 20, 30, 40, 50});
const std::vector<AxisValue> kDegrees = nums({4, 10, 20});
const std::vector<AxisValue> kAllTopologies = {TopologyKind::Grid2D, TopologyKind::Torus,
                                               TopologyKind::WattsStrogatz};

RunSpec base_spec(Protocol protocol, TopologyKind kind) {
  RunSpec base;
  base.protocol = protocol;
  base.topology.kind = kind;
  base.topology.side = 15;  // N = 225, the paper's medium size
  base.topology.n = 225;
  base.topology.k = 10;
  base.topology.p_rewire = 1.0;
  return base;
}

void set_adversary(RunSpec& spec, NodeKind kind, double fraction) {
  spec.adversary.kind = kind;
  spec.adversary.fraction = fraction;
}

constexpr double kThird = 1.0 / 3.0;

SweepSpec make(const std::string& name, RunSpec base, std::vector<SweepAxis> axes) {
  SweepSpec spec;
  spec.name = name;
  spec.base = base;
  spec.axes = std::move(axes);
  return spec;
}

}  // namespace

const std::vector<std::string>& preset_ids() {
  static const std::vector<std::string> ids = {
      "fig3-grid", "fig3-torus", "fig3-ws", "fig4",  "fig5",  "fig6",
      "fig7",      "fig8",       "fig9",    "fig10", "fig11", "fig12",
      "fig13",     "fig14",      "fig15",   "fig16",
  };
  return ids;
}

SweepSpec figure_preset(const std::string& id) {
  // FPC size sweeps without adversaries, one per topology.
  if (id == "fig3-grid") {
    return make(id, base_spec(Protocol::Fpc, TopologyKind::Grid2D),
                {{AxisParam::Side, kSizes}, {AxisParam::P0, p0_grid()}});
  }
  if (id == "fig3-torus") {
    return make(id, base_spec(Protocol::Fpc, TopologyKind::Torus),
                {{AxisParam::Side, kSizes}, {AxisParam::P0, p0_grid()}});
  }
  if (id == "fig3-ws") {
    return make(id, base_spec(Protocol::Fpc, TopologyKind::WattsStrogatz),
                {{AxisParam::N, kWsSizes}, {AxisParam::P0, p0_grid()}});
  }
  // FPC Watts-Strogatz degree sweep.
  if (id == "fig4") {
    return make(id, base_spec(Protocol::Fpc, TopologyKind::WattsStrogatz),
                {{AxisParam::K, kDegrees}, {AxisParam::P0, p0_grid()}});
  }
  // FPC round-count sweep, three topologies at N = 225.
  if (id == "fig5") {
    return make(id, base_spec(Protocol::Fpc, TopologyKind::Grid2D),
                {{AxisParam::Topology, kAllTopologies},
                 {AxisParam::Rounds, kRoundCounts},
                 {AxisParam::P0, p0_grid()}});
  }
  // FPC with 33% Cautious over network sizes.
  if (id == "fig6") {
    RunSpec base = base_spec(Protocol::Fpc, TopologyKind::Grid2D);
    set_adversary(base, NodeKind::Cautious, kThird);
    return make(id, base,
                {{AxisParam::Topology, kAllTopologies},
                 {AxisParam::Side, kSizes},
                 {AxisParam::P0, p0_grid()}});
  }
  // FPC Cautious percentage sweep at N = 225.
  if (id == "fig7") {
    RunSpec base = base_spec(Protocol::Fpc, TopologyKind::Grid2D);
    base.adversary.kind = NodeKind::Cautious;
    return make(id, base,
                {{AxisParam::Topology, kAllTopologies},
                 {AxisParam::AdversaryFraction, kFractions},
                 {AxisParam::P0, p0_grid()}});
  }
  // FPC with 33% Semi-Cautious over network sizes.
  if (id == "fig8") {
    RunSpec base = base_spec(Protocol::Fpc, TopologyKind::Grid2D);
    set_adversary(base, NodeKind::SemiCautious, kThird);
    return make(id, base,
                {{AxisParam::Topology, kAllTopologies},
                 {AxisParam::Side, kSizes},
                 {AxisParam::P0, p0_grid()}});
  }
  // FPC Semi-Cautious percentage sweep at N = 225.
  if (id == "fig9") {
    RunSpec base = base_spec(Protocol::Fpc, TopologyKind::Grid2D);
    base.adversary.kind = NodeKind::SemiCautious;
    return make(id, base,
                {{AxisParam::Topology, kAllTopologies},
                 {AxisParam::AdversaryFraction, kFractions},
                 {AxisParam::P0, p0_grid()}});
  }
  // CC size sweep without adversaries.
  if (id == "fig10") {
    return make(id, base_spec(Protocol::Cc, TopologyKind::Grid2D),
                {{AxisParam::Topology, kAllTopologies},
                 {AxisParam::Side, kSizes},
                 {AxisParam::P0, p0_grid()}});
  }
  // CC Watts-Strogatz degree sweep.
  if (id == "fig11") {
    return make(id, base_spec(Protocol::Cc, TopologyKind::WattsStrogatz),
                {{AxisParam::K, kDegrees}, {AxisParam::P0, p0_grid()}});
  }
  // CC with 33% Cautious over network sizes.
  if (id == "fig12") {
    RunSpec base = base_spec(Protocol::Cc, TopologyKind::Grid2D);
    set_adversary(base, NodeKind::Cautious, kThird);
    return make(id, base,
                {{AxisParam::Topology, kAllTopologies},
                 {AxisParam::Side, kSizes},
                 {AxisParam::P0, p0_grid()}});
  }
  // CC Watts-Strogatz degree sweep with 33% Cautious.
  if (id == "fig13") {
    RunSpec base = base_spec(Protocol::Cc, TopologyKind::WattsStrogatz);
    set_adversary(base, NodeKind::Cautious, kThird);
    return make(id, base, {{AxisParam::K, kDegrees}, {AxisParam::P0, p0_grid()}});
  }
  // CC Cautious percentage sweep at N = 225.
  if (id == "fig14") {
    RunSpec base = base_spec(Protocol::Cc, TopologyKind::Grid2D);
    base.adversary.kind = NodeKind::Cautious;
    return make(id, base,
                {{AxisParam::Topology, kAllTopologies},
                 {AxisParam::AdversaryFraction, kFractions},
                 {AxisParam::P0, p0_grid()}});
  }
  // CC with 33% Semi-Cautious over network sizes.
  if (id == "fig15") {
    RunSpec base = base_spec(Protocol::Cc, TopologyKind::Grid2D);
    set_adversary(base, NodeKind::SemiCautious, kThird);
    return make(id, base,
                {{AxisParam::Topology, kAllTopologies},
                 {AxisParam::Side, kSizes},
                 {AxisParam::P0, p0_grid()}});
  }
  // CC Watts-Strogatz degree sweep with 33% Semi-Cautious.
  if (id == "fig16") {
    RunSpec base = base_spec(Protocol::Cc, TopologyKind::WattsStrogatz);
    set_adversary(base, NodeKind::SemiCautious, kThird);
    return make(id, base, {{AxisParam::K, kDegrees}, {AxisParam::P0, p0_grid()}});
  }

  std::string valid;
  for (const auto& known : preset_ids()) {
    if (!valid.empty()) valid += ", ";
    valid += known;
  }
  throw UsageError("unknown preset '" + id + "'; valid ids: " + valid);
}

}  // namespace iotasim
