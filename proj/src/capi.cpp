#include "iotasim.h"

#include <memory>
#include <new>
#include <string>

#include "iotasim/config.hpp"
#include "iotasim/presets.hpp"
#include "iotasim/sweep.hpp"

using namespace iotasim;

struct iotasim_spec {
  SpecBuilder builder;
};

struct iotasim_result {
  SweepResult result;
  std::string csv;  // rendered lazily
};

namespace {

thread_local std::string g_last_error;

iotasim_status fail(iotasim_status code, const char* what) {
  g_last_error = what != nullptr ? what : "unknown error";
  return code;
}

template <typename Fn>
iotasim_status guarded(Fn&& fn) {
  try {
    fn();
    return IOTASIM_OK;
  } catch (const UsageError& e) {
    return fail(IOTASIM_ERR_USAGE, e.what());
  } catch (const TopologyError& e) {
    return fail(IOTASIM_ERR_USAGE, e.what());
  } catch (const GenerationError& e) {
    return fail(IOTASIM_ERR_GENERATION, e.what());
  } catch (const std::exception& e) {
    return fail(IOTASIM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(IOTASIM_ERR_INTERNAL, "unknown error");
  }
}

}  // namespace

extern "C" {

iotasim_spec* iotasim_spec_new(void) { return new (std::nothrow) iotasim_spec(); }

void iotasim_spec_free(iotasim_spec* spec) { delete spec; }

iotasim_status iotasim_spec_set(iotasim_spec* spec, const char* key, const char* value) {
  if (!spec || !key || !value) return fail(IOTASIM_ERR_USAGE, "null argument");
  return guarded([&] { spec->builder.set(key, value); });
}

iotasim_status iotasim_spec_load(iotasim_spec* spec, const char* path) {
  if (!spec || !path) return fail(IOTASIM_ERR_USAGE, "null argument");
  return guarded([&] { spec->builder.load_file(path); });
}

iotasim_status iotasim_spec_from_preset(iotasim_spec* spec, const char* figure_id) {
  if (!spec || !figure_id) return fail(IOTASIM_ERR_USAGE, "null argument");
  return guarded([&] { spec->builder = SpecBuilder(figure_preset(figure_id)); });
}

iotasim_status iotasim_spec_validate(const iotasim_spec* spec) {
  if (!spec) return fail(IOTASIM_ERR_USAGE, "null argument");
  return guarded([&] { spec->builder.validate(); });
}

size_t iotasim_spec_points(const iotasim_spec* spec) {
  if (!spec) return 0;
  return sweep_point_count(spec->builder.spec());
}

iotasim_status iotasim_spec_run(const iotasim_spec* spec, int workers,
                                iotasim_result** out) {
  if (!spec || !out) return fail(IOTASIM_ERR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&] {
    spec->builder.validate();
    auto result = std::make_unique<iotasim_result>();
    result->result = run_sweep(spec->builder.spec(), workers);
    *out = result.release();
  });
}

size_t iotasim_result_rows(const iotasim_result* result) {
  return result ? result->result.rows.size() : 0;
}

const char* iotasim_result_csv(const iotasim_result* result) {
  if (!result) return nullptr;
  auto* mutable_result = const_cast<iotasim_result*>(result);
  if (mutable_result->csv.empty()) mutable_result->csv = to_csv(result->result);
  return mutable_result->csv.c_str();
}

iotasim_status iotasim_result_write_csv(const iotasim_result* result, const char* path) {
  if (!result || !path) return fail(IOTASIM_ERR_USAGE, "null argument");
  try {
    write_csv(result->result, path);
    return IOTASIM_OK;
  } catch (const std::exception& e) {
    return fail(IOTASIM_ERR_IO, e.what());
  }
}

const char* iotasim_presets(void) {
  static const std::string joined = [] {
    std::string out;
    for (const auto& id : preset_ids()) {
      out += id;
      out += '\n';
    }
    return out;
  }();
  return joined.c_str();
}

const char* iotasim_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
