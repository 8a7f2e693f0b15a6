/* C interface to the triangle-Jacobi algebra verification core.
 *
 * All functions return trijac_status; results come back through out
 * parameters. Strings returned through char** are owned by the caller and
 * released with trijac_string_free. A session holds the loaded relation
 * catalogue and reports errors through trijac_last_error.
 */
#ifndef TRIJAC_CAPI_H
#define TRIJAC_CAPI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum trijac_status {
  TRIJAC_OK = 0,
  TRIJAC_VERIFY_FAILED = 1, /* a verification check reported fail */
  TRIJAC_USAGE = 2,         /* bad arguments, config or I/O */
  TRIJAC_ERROR = 3          /* internal error; see trijac_last_error */
} trijac_status;

typedef struct trijac_session trijac_session;

/* catalogue_path may be NULL to use the compiled-in default (overridable
 * with the TRIJAC_CATALOGUE environment variable). */
trijac_session* trijac_session_new(const char* catalogue_path);
void trijac_session_free(trijac_session* s);

/* Message for the most recent failing call on this session. */
const char* trijac_last_error(const trijac_session* s);

const char* trijac_version(void);

void trijac_string_free(char* s);

/* Hex SHA-256 of the catalogue the session loaded. */
trijac_status trijac_catalogue_hash(trijac_session* s, char** out_hex);

/* Textual form of J_{n,k}; requires 0 <= k <= n. */
trijac_status trijac_poly(trijac_session* s, int n, int k, char** out_text);

/* Gram matrix of the family up to n_max as a JSON array of arrays of exact
 * fraction strings. */
trijac_status trijac_gram_json(trijac_session* s, int n_max, char** out_json);

typedef struct trijac_run_config {
  int n_max;                  /* index bound for action suites (default 6) */
  const char* mode;           /* "symbolic" | "sampled" (default sampled) */
  int samples;                /* minimum accepted samples per relation */
  uint64_t seed;              /* sample-point seed */
  const char* representation; /* "variable" | "degree" | "both" */
  const char* suite;          /* see trijac_suite_names */
  int with_timings;           /* nonzero: real elapsed_ms in the report */
  int threads;                /* worker threads; <= 1 serial */
} trijac_run_config;

/* Fills in the documented defaults. */
void trijac_run_config_init(trijac_run_config* cfg);

/* Runs the selected suite; writes the JSON report atomically to out_path
 * (skipped when NULL). *out_failures receives the number of failing checks.
 * Returns TRIJAC_VERIFY_FAILED when that count is nonzero. */
trijac_status trijac_verify(trijac_session* s, const trijac_run_config* cfg,
                            const char* out_path, int* out_failures);

/* Newline-separated list of suite names accepted by trijac_verify. */
const char* trijac_suite_names(void);

#ifdef __cplusplus
}
#endif

#endif /* TRIJAC_CAPI_H */
