// Command-line front end. Talks to the simulator exclusively through the
// C API in iotasim.h.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "iotasim.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitGeneration = 2;

int status_to_exit(iotasim_status status) {
  switch (status) {
    case IOTASIM_OK: return kExitOk;
    case IOTASIM_ERR_GENERATION: return kExitGeneration;
    default: return kExitUsage;
  }
}

int default_workers() {
  if (const char* env = std::getenv("IOTASIM_WORKERS")) {
    int value = std::atoi(env);
    if (value >= 1) return value;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

struct SpecHandle {
  iotasim_spec* ptr = iotasim_spec_new();
  ~SpecHandle() { iotasim_spec_free(ptr); }
};

struct ResultHandle {
  iotasim_result* ptr = nullptr;
  ~ResultHandle() { iotasim_result_free(ptr); }
};

int apply_settings(iotasim_spec* spec, const std::vector<std::string>& settings) {
  for (const auto& kv : settings) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::fprintf(stderr, "error: --set expects key=value, got '%s'\n", kv.c_str());
      return kExitUsage;
    }
    iotasim_status status =
        iotasim_spec_set(spec, kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str());
    if (status != IOTASIM_OK) {
      std::fprintf(stderr, "error: %s\n", iotasim_last_error());
      return status_to_exit(status);
    }
  }
  return kExitOk;
}

int execute(iotasim_spec* spec, int workers, const std::string& out_path) {
  ResultHandle result;
  iotasim_status status = iotasim_spec_run(spec, workers, &result.ptr);
  if (status != IOTASIM_OK) {
    std::fprintf(stderr, "error: %s\n", iotasim_last_error());
    return status_to_exit(status);
  }
  if (out_path.empty()) {
    std::fputs(iotasim_result_csv(result.ptr), stdout);
  } else {
    status = iotasim_result_write_csv(result.ptr, out_path.c_str());
    if (status != IOTASIM_OK) {
      std::fprintf(stderr, "error: %s\n", iotasim_last_error());
      return status_to_exit(status);
    }
    std::fprintf(stderr, "wrote %zu rows to %s\n", iotasim_result_rows(result.ptr),
                 out_path.c_str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Round-based consensus simulator (FPC / cellular consensus)"};
  app.require_subcommand(1);

  std::string spec_file;
  std::string preset;
  std::string out_path;
  std::vector<std::string> settings;
  long long seed = -1;
  int runs = -1;
  int workers = default_workers();

  auto add_common = [&](CLI::App* cmd, bool with_preset) {
    cmd->add_option("spec", spec_file, "spec file (key=value lines)");
    if (with_preset) cmd->add_option("--preset", preset, "figure preset id");
    cmd->add_option("--set", settings, "override key=value (repeatable)");
    cmd->add_option("--seed", seed, "master seed");
    cmd->add_option("--runs", runs, "runs per parameter point");
    cmd->add_option("--workers", workers, "worker thread count");
    cmd->add_option("--out", out_path, "output CSV path (default: stdout)");
  };

  CLI::App* run_cmd = app.add_subcommand("run", "evaluate a single parameter point");
  add_common(run_cmd, false);
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "evaluate a parameter grid");
  add_common(sweep_cmd, true);
  CLI::App* presets_cmd = app.add_subcommand("presets", "list figure presets");
  CLI::App* validate_cmd = app.add_subcommand("validate", "check a spec without running");
  validate_cmd->add_option("spec", spec_file, "spec file (key=value lines)")->required();
  validate_cmd->add_option("--set", settings, "override key=value (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (presets_cmd->parsed()) {
    std::fputs(iotasim_presets(), stdout);
    return kExitOk;
  }

  SpecHandle spec;
  if (!spec.ptr) {
    std::fputs("error: out of memory\n", stderr);
    return kExitUsage;
  }

  if (!preset.empty()) {
    iotasim_status status = iotasim_spec_from_preset(spec.ptr, preset.c_str());
    if (status != IOTASIM_OK) {
      std::fprintf(stderr, "error: %s\n", iotasim_last_error());
      return kExitUsage;
    }
  }
  if (!spec_file.empty()) {
    iotasim_status status = iotasim_spec_load(spec.ptr, spec_file.c_str());
    if (status != IOTASIM_OK) {
      std::fprintf(stderr, "error: %s\n", iotasim_last_error());
      return kExitUsage;
    }
  }
  if (sweep_cmd->parsed() && preset.empty() && spec_file.empty()) {
    std::fputs("error: sweep needs a spec file or --preset\n", stderr);
    return kExitUsage;
  }

  if (int code = apply_settings(spec.ptr, settings); code != kExitOk) return code;
  if (seed >= 0) {
    iotasim_spec_set(spec.ptr, "seed", std::to_string(seed).c_str());
  }
  if (runs >= 0) {
    if (iotasim_spec_set(spec.ptr, "runs", std::to_string(runs).c_str()) != IOTASIM_OK) {
      std::fprintf(stderr, "error: %s\n", iotasim_last_error());
      return kExitUsage;
    }
  }

  iotasim_status status = iotasim_spec_validate(spec.ptr);
  if (status != IOTASIM_OK) {
    std::fprintf(stderr, "error: %s\n", iotasim_last_error());
    return status_to_exit(status);
  }

  if (validate_cmd->parsed()) {
    std::fprintf(stderr, "ok: %zu parameter point(s)\n", iotasim_spec_points(spec.ptr));
    return kExitOk;
  }
  if (run_cmd->parsed() && iotasim_spec_points(spec.ptr) != 1) {
    std::fprintf(stderr,
                 "error: 'run' expects a single parameter point (%zu given); use 'sweep'\n",
                 iotasim_spec_points(spec.ptr));
    return kExitUsage;
  }
  return execute(spec.ptr, workers, out_path);
}
