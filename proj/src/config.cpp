#include "iotasim/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace iotasim {

namespace {

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> parts;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(trim(item));
  return parts;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw UsageError("bad numeric value for " + key + ": '" + value + "'");
  }
}

long long parse_int(const std::string& key, const std::string& value) {
  double v = parse_double(key, value);
  if (v != std::floor(v)) throw UsageError(key + " must be an integer, got '" + value + "'");
  return static_cast<long long>(v);
}

NodeKind parse_kind(const std::string& value) {
  if (value == "honest") return NodeKind::Honest;
  if (value == "cautious") return NodeKind::Cautious;
  if (value == "semicautious" || value == "semi-cautious") return NodeKind::SemiCautious;
  if (value == "berserk") return NodeKind::Berserk;
  throw UsageError("bad adversary_kind '" + value +
                   "' (expected honest|cautious|semicautious|berserk)");
}

TopologyKind parse_topology(const std::string& value) {
  if (value == "grid" || value == "grid2d") return TopologyKind::Grid2D;
  if (value == "torus") return TopologyKind::Torus;
  if (value == "ws" || value == "watts-strogatz" || value == "watts_strogatz")
    return TopologyKind::WattsStrogatz;
  throw UsageError("bad topology '" + value + "' (expected grid|torus|ws)");
}

}  // namespace

void SpecBuilder::set_axis_or_base(AxisParam param, const std::string& value) {
  auto parse_one = [&](const std::string& v) -> AxisValue {
    switch (param) {
      case AxisParam::AdversaryKind:
        return parse_kind(v);
      case AxisParam::Topology:
        return parse_topology(v);
      default:
        return parse_double("axis value", v);
    }
  };

  // Re-setting a key replaces any previously declared axis for it.
  std::erase_if(spec_.axes, [&](const SweepAxis& a) { return a.param == param; });

  std::vector<std::string> parts = split_list(value);
  if (parts.empty()) throw UsageError("empty value");
  if (parts.size() == 1) {
    // Single value goes to the base spec.
    RunSpec& base = spec_.base;
    AxisValue v = parse_one(parts[0]);
    switch (param) {
      case AxisParam::P0: base.p0 = std::get<double>(v); break;
      case AxisParam::Side: {
        int side = static_cast<int>(std::get<double>(v));
        base.topology.side = side;
        base.topology.n = side * side;
        break;
      }
      case AxisParam::N: {
        int n = static_cast<int>(std::get<double>(v));
        base.topology.n = n;
        base.topology.side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
        break;
      }
      case AxisParam::K: base.topology.k = static_cast<int>(std::get<double>(v)); break;
      case AxisParam::Rounds: {
        int m = static_cast<int>(std::get<double>(v));
        base.fpc.rounds = m;
        base.cc.rounds = m;
        break;
      }
      case AxisParam::AdversaryFraction:
        base.adversary.fraction = std::get<double>(v);
        break;
      case AxisParam::AdversaryKind:
        base.adversary.kind = std::get<NodeKind>(v);
        break;
      case AxisParam::Topology:
        base.topology.kind = std::get<TopologyKind>(v);
        break;
    }
    return;
  }

  SweepAxis axis;
  axis.param = param;
  for (const auto& part : parts) axis.values.push_back(parse_one(part));
  spec_.axes.push_back(std::move(axis));
}

void SpecBuilder::set(const std::string& raw_key, const std::string& raw_value) {
  const std::string key = trim(raw_key);
  const std::string value = trim(raw_value);
  if (key.empty()) throw UsageError("empty key");

  if (key == "name") { spec_.name = value; return; }
  if (key == "protocol") {
    if (value == "fpc") spec_.base.protocol = Protocol::Fpc;
    else if (value == "cc") spec_.base.protocol = Protocol::Cc;
    else throw UsageError("bad protocol '" + value + "' (expected fpc|cc)");
    return;
  }
  if (key == "topology") { set_axis_or_base(AxisParam::Topology, value); return; }
  if (key == "side") { set_axis_or_base(AxisParam::Side, value); return; }
  if (key == "n") { set_axis_or_base(AxisParam::N, value); return; }
  if (key == "k") { set_axis_or_base(AxisParam::K, value); return; }
  if (key == "rounds") { set_axis_or_base(AxisParam::Rounds, value); return; }
  if (key == "adversary_kind") { set_axis_or_base(AxisParam::AdversaryKind, value); return; }
  if (key == "adversary_fraction") {
    set_axis_or_base(AxisParam::AdversaryFraction, value);
    return;
  }
  if (key == "p0") { set_axis_or_base(AxisParam::P0, value); return; }

  if (key == "p_rewire") { spec_.base.topology.p_rewire = parse_double(key, value); return; }
  if (key == "p_lying") { spec_.base.adversary.p_lying = parse_double(key, value); return; }
  if (key == "p_silence") { spec_.base.adversary.p_silence = parse_double(key, value); return; }
  if (key == "walk_distance") {
    spec_.base.fpc.walk_distance = static_cast<int>(parse_int(key, value));
    return;
  }
  if (key == "query_count") {
    spec_.base.fpc.query_count = static_cast<int>(parse_int(key, value));
    return;
  }
  if (key == "tau") { spec_.base.fpc.tau = parse_double(key, value); return; }
  if (key == "beta") { spec_.base.fpc.beta = parse_double(key, value); return; }
  if (key == "runs") { spec_.runs_per_point = static_cast<int>(parse_int(key, value)); return; }
  if (key == "seed") {
    try {
      spec_.master_seed = std::stoull(value);
    } catch (const std::exception&) {
      throw UsageError("bad seed '" + value + "'");
    }
    return;
  }
  if (key == "dead_end_walk") {
    if (value == "stop_and_query") spec_.base.dead_end_walk = DeadEndPolicy::StopAndQuery;
    else if (value == "abort") spec_.base.dead_end_walk = DeadEndPolicy::Abort;
    else throw UsageError("bad dead_end_walk '" + value + "' (expected stop_and_query|abort)");
    return;
  }
  if (key == "consensus_scope") {
    if (value == "honest") spec_.base.consensus_scope = ConsensusScope::Honest;
    else if (value == "all") spec_.base.consensus_scope = ConsensusScope::All;
    else throw UsageError("bad consensus_scope '" + value + "' (expected honest|all)");
    return;
  }
  throw UsageError("unknown key '" + key + "'");
}

void SpecBuilder::load_text(const std::string& text) {
  std::stringstream ss(text);
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError("line " + std::to_string(line_no) + ": expected key=value");
    set(line.substr(0, eq), line.substr(eq + 1));
  }
}

void SpecBuilder::load_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read spec file '" + path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  load_text(buffer.str());
}

void SpecBuilder::validate() const {
  const RunSpec& b = spec_.base;
  auto check = [](bool ok, const std::string& message) {
    if (!ok) throw UsageError(message);
  };
  check(b.p0 >= 0.0 && b.p0 <= 1.0, "p0 must be in [0,1]");
  check(b.fpc.tau >= 0.0 && b.fpc.tau <= 1.0, "tau must be in [0,1]");
  check(b.fpc.beta >= 0.0 && b.fpc.beta < 0.5, "beta must be in [0, 0.5)");
  check(b.fpc.walk_distance >= 1 && b.fpc.walk_distance <= 60,
        "walk_distance must be in [1, 60]");
  check(b.fpc.query_count >= 1, "query_count must be >= 1");
  check(b.topology.p_rewire >= 0.0 && b.topology.p_rewire <= 1.0,
        "p_rewire must be in [0,1]");
  check(b.adversary.p_lying >= 0.0 && b.adversary.p_lying <= 1.0,
        "p_lying must be in [0,1]");
  check(b.adversary.p_silence >= 0.0 && b.adversary.p_silence <= 1.0,
        "p_silence must be in [0,1]");
  check(spec_.runs_per_point >= 1, "runs must be >= 1");

  // Topology preconditions and ranges for every grid point.
  const std::size_t points = sweep_point_count(spec_);
  for (std::size_t p = 0; p < points; ++p) {
    RunSpec s = resolve_point(spec_, p);
    std::string where = points > 1 ? " (grid point " + std::to_string(p) + ")" : "";
    check(s.p0 >= 0.0 && s.p0 <= 1.0, "p0 must be in [0,1]" + where);
    check(s.adversary.fraction >= 0.0 && s.adversary.fraction <= 1.0,
          "adversary_fraction must be in [0,1]" + where);
    check(s.rounds() >= 1, "rounds must be >= 1" + where);
    switch (s.topology.kind) {
      case TopologyKind::Grid2D:
        check(s.topology.side >= 1, "grid side must be >= 1" + where);
        break;
      case TopologyKind::Torus:
        check(s.topology.side >= 3, "torus side must be >= 3" + where);
        break;
      case TopologyKind::WattsStrogatz:
        check(s.topology.k >= 2 && s.topology.k % 2 == 0,
              "watts-strogatz k must be even and >= 2" + where);
        check(s.topology.k < s.topology.n, "watts-strogatz requires k < n" + where);
        break;
    }
  }
}

}  // namespace iotasim
