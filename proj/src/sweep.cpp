#include "iotasim/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace iotasim {

std::size_t sweep_point_count(const SweepSpec& spec) {
  std::size_t total = 1;
  for (const auto& axis : spec.axes) total *= axis.values.size();
  return total;
}

namespace {

void apply_axis(RunSpec& spec, AxisParam param, const AxisValue& value) {
  switch (param) {
    case AxisParam::P0:
      spec.p0 = std::get<double>(value);
      break;
    case AxisParam::Side: {
      int side = static_cast<int>(std::get<double>(value));
      spec.topology.side = side;
      spec.topology.n = side * side;
      break;
    }
    case AxisParam::N: {
      int n = static_cast<int>(std::get<double>(value));
      spec.topology.n = n;
      spec.topology.side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
      break;
    }
    case AxisParam::K:
      spec.topology.k = static_cast<int>(std::get<double>(value));
      break;
    case AxisParam::Rounds: {
      int m = static_cast<int>(std::get<double>(value));
      spec.fpc.rounds = m;
      spec.cc.rounds = m;
      break;
    }
    case AxisParam::AdversaryFraction:
      spec.adversary.fraction = std::get<double>(value);
      break;
    case AxisParam::AdversaryKind:
      spec.adversary.kind = std::get<NodeKind>(value);
      break;
    case AxisParam::Topology:
      spec.topology.kind = std::get<TopologyKind>(value);
      break;
  }
}

}  // namespace

RunSpec resolve_point(const SweepSpec& spec, std::size_t point_index) {
  RunSpec resolved = spec.base;
  // Mixed-radix decomposition, last axis fastest.
  std::size_t remainder = point_index;
  std::vector<std::size_t> digits(spec.axes.size(), 0);
  for (std::size_t a = spec.axes.size(); a-- > 0;) {
    std::size_t radix = spec.axes[a].values.size();
    digits[a] = remainder % radix;
    remainder /= radix;
  }
  for (std::size_t a = 0; a < spec.axes.size(); ++a) {
    apply_axis(resolved, spec.axes[a].param, spec.axes[a].values[digits[a]]);
  }
  return resolved;
}

SweepResult run_sweep(const SweepSpec& spec, int workers) {
  const std::size_t points = sweep_point_count(spec);
  const std::size_t runs = static_cast<std::size_t>(spec.runs_per_point);
  const std::size_t jobs = points * runs;

  std::vector<RunSpec> point_specs(points);
  for (std::size_t p = 0; p < points; ++p) point_specs[p] = resolve_point(spec, p);

  std::vector<char> converged(jobs, 0);
  auto job = [&](std::size_t idx) {
    std::size_t p = idx / runs;
    std::size_t r = idx % runs;
    RunSpec run_spec = point_specs[p];
    run_spec.seed = derive_run_seed(spec.master_seed, p, r);
    try {
      converged[idx] = run(run_spec).converged ? 1 : 0;
    } catch (const GenerationError& e) {
      throw GenerationError("point " + std::to_string(p) + ": " + e.what());
    }
  };

  if (workers <= 1 || jobs <= 1) {
    for (std::size_t i = 0; i < jobs; ++i) job(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < jobs; i = next.fetch_add(1)) {
          try {
            job(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
            return;
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }

  SweepResult result;
  result.rows.resize(points);
  for (std::size_t p = 0; p < points; ++p) {
    SweepRow& row = result.rows[p];
    row.spec = point_specs[p];
    row.runs = spec.runs_per_point;
    for (std::size_t r = 0; r < runs; ++r) row.converged += converged[p * runs + r];
    row.rate = row.runs > 0 ? static_cast<double>(row.converged) / row.runs : 0.0;
    row.ci95 = wilson_half_width(row.converged, row.runs);
  }
  return result;
}

namespace {

std::string fixed6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

std::string csv_header() {
  return "protocol,topology,n,side,k,p_rewire,rounds,adversary_kind,"
         "adversary_fraction,p_lying,p_silence,p0,runs,converged,rate,ci95";
}

std::string csv_row(const SweepRow& row) {
  const RunSpec& s = row.spec;
  const bool ws = s.topology.kind == TopologyKind::WattsStrogatz;
  const bool has_adv = s.adversary.kind != NodeKind::Honest && s.adversary.fraction > 0.0;
  const NodeKind kind = has_adv ? s.adversary.kind : NodeKind::Honest;

  std::string out;
  out += protocol_name(s.protocol);
  out += ',';
  out += topology_kind_name(s.topology.kind);
  out += ',';
  out += std::to_string(s.topology.node_count());
  out += ',';
  out += ws ? "" : std::to_string(s.topology.side);
  out += ',';
  out += ws ? std::to_string(s.topology.k) : "";
  out += ',';
  out += ws ? fixed6(s.topology.p_rewire) : "";
  out += ',';
  out += std::to_string(s.rounds());
  out += ',';
  out += node_kind_name(kind);
  out += ',';
  out += fixed6(has_adv ? s.adversary.fraction : 0.0);
  out += ',';
  out += (kind == NodeKind::Cautious || kind == NodeKind::Berserk)
             ? fixed6(s.adversary.p_lying) : "";
  out += ',';
  out += kind == NodeKind::SemiCautious ? fixed6(s.adversary.p_silence) : "";
  out += ',';
  out += fixed6(s.p0);
  out += ',';
  out += std::to_string(row.runs);
  out += ',';
  out += std::to_string(row.converged);
  out += ',';
  out += fixed6(row.rate);
  out += ',';
  out += fixed6(row.ci95);
  return out;
}

std::string to_csv(const SweepResult& result) {
  std::string out = csv_header();
  out += '\n';
  for (const auto& row : result.rows) {
    out += csv_row(row);
    out += '\n';
  }
  return out;
}

void write_csv(const SweepResult& result, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << to_csv(result);
  if (!file) throw std::runtime_error("write failed: " + path);
}

}  // namespace iotasim
