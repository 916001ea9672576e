/* C API for the consensus simulator. Opaque handles, integer status codes.
 * All functions are thread-compatible: distinct handles may be used from
 * distinct threads; a single handle must not be shared without locking.
 * iotasim_last_error() returns a thread-local message for the most recent
 * failing call on the calling thread. */

#ifndef IOTASIM_H
#define IOTASIM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum iotasim_status {
  IOTASIM_OK = 0,
  IOTASIM_ERR_USAGE = 1,      /* bad key, value, preset id or spec */
  IOTASIM_ERR_GENERATION = 2, /* topology generation failure */
  IOTASIM_ERR_IO = 3,         /* file read/write failure */
  IOTASIM_ERR_INTERNAL = 4,
} iotasim_status;

/* A sweep specification: a base parameter point plus optional axes.
 * With no axes it describes a single parameter point. */
typedef struct iotasim_spec iotasim_spec;

/* A finished sweep: one row per grid point. */
typedef struct iotasim_result iotasim_result;

iotasim_spec* iotasim_spec_new(void);
void iotasim_spec_free(iotasim_spec* spec);

/* Sets one key=value pair; keys mirror the CSV column names. A comma
 * separated value for an axis-capable key declares a sweep axis. */
iotasim_status iotasim_spec_set(iotasim_spec* spec, const char* key, const char* value);

/* Loads a flat key=value spec file ('#' comments). */
iotasim_status iotasim_spec_load(iotasim_spec* spec, const char* path);

/* Replaces the spec with a named figure preset (fig3-grid ... fig16). */
iotasim_status iotasim_spec_from_preset(iotasim_spec* spec, const char* figure_id);

/* Range and topology precondition checks for every grid point. */
iotasim_status iotasim_spec_validate(const iotasim_spec* spec);

/* Number of grid points the spec describes. */
size_t iotasim_spec_points(const iotasim_spec* spec);

/* Runs the sweep on `workers` threads (<= 1 means sequential). Results are
 * bit-identical at any worker count. On success *out owns the result. */
iotasim_status iotasim_spec_run(const iotasim_spec* spec, int workers,
                                iotasim_result** out);

size_t iotasim_result_rows(const iotasim_result* result);

/* CSV rendering of the result; the string is owned by the result handle. */
const char* iotasim_result_csv(const iotasim_result* result);

iotasim_status iotasim_result_write_csv(const iotasim_result* result, const char* path);

void iotasim_result_free(iotasim_result* result);

/* Newline-separated preset ids (static storage). */
const char* iotasim_presets(void);

/* Thread-local message for the most recent failing call. */
const char* iotasim_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* IOTASIM_H */
