/*
Copyright 2026 The jacsyz Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

/* C interface to the jacsyz engine. Every function that can fail returns a
 * jacsyz_status; the message and error name of the last failure on the
 * calling thread are available from jacsyz_last_error and
 * jacsyz_last_error_code. Strings returned through char** are owned by the
 * caller and released with jacsyz_string_free. Handles are opaque. */

#ifndef JACSYZ_JACSYZ_H
#define JACSYZ_JACSYZ_H

#include <stddef.h>
#include <stdint.h>

#if defined(JACSYZ_BUILDING_LIBRARY)
#define JACSYZ_API __attribute__((visibility("default")))
#else
#define JACSYZ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as process exit codes. */
typedef enum jacsyz_status {
  JACSYZ_OK = 0,
  JACSYZ_ERR_USAGE = 1,    /* bad arguments or configuration */
  JACSYZ_ERR_INPUT = 2,    /* parse error, not reduced, concurrent lines, ... */
  JACSYZ_ERR_CLOSURE = 3,  /* resolution did not close within the bound cap */
  JACSYZ_ERR_INTERNAL = 4  /* unexpected failure (out of memory, ...) */
} jacsyz_status;

/* Verdict bits returned by jacsyz_analysis_verdicts. */
enum {
  JACSYZ_FREE = 1u << 0,
  JACSYZ_NEARLY_FREE = 1u << 1,
  JACSYZ_PLUS_ONE_GENERATED = 1u << 2,
  JACSYZ_MAXIMAL_TJURINA = 1u << 3,
  JACSYZ_TYPE_DRM = 1u << 4,
  JACSYZ_SMOOTH = 1u << 5,
  JACSYZ_GENERIC_3SYZ = 1u << 6,
  JACSYZ_OTHER = 1u << 7
};

typedef struct jacsyz_config jacsyz_config;
typedef struct jacsyz_analysis jacsyz_analysis;
typedef struct jacsyz_verify_run jacsyz_verify_run;
typedef struct jacsyz_search_run jacsyz_search_run;

/* Progress callback: one finished line of output at a time. */
typedef void (*jacsyz_line_fn)(const char* line, void* user);

JACSYZ_API const char* jacsyz_version(void);
JACSYZ_API const char* jacsyz_last_error(void);
JACSYZ_API const char* jacsyz_last_error_code(void);
JACSYZ_API void jacsyz_string_free(char* s);

/* Configuration. Defaults: prime field mod 2^31-1, bound 2d, seed 0,
 * escalation cap 3, no saturation. */
JACSYZ_API jacsyz_config* jacsyz_config_new(void);
JACSYZ_API void jacsyz_config_free(jacsyz_config* cfg);
JACSYZ_API int jacsyz_config_set_prime(jacsyz_config* cfg, uint32_t prime);
JACSYZ_API int jacsyz_config_set_exact(jacsyz_config* cfg, int exact);
JACSYZ_API int jacsyz_config_set_bound(jacsyz_config* cfg, int bound);
JACSYZ_API int jacsyz_config_set_saturation(jacsyz_config* cfg, int on);
JACSYZ_API int jacsyz_config_set_seed(jacsyz_config* cfg, uint64_t seed);
JACSYZ_API int jacsyz_config_set_escalation_cap(jacsyz_config* cfg, int cap);
/* Applies JACSYZ_PRIME and JACSYZ_SEED from the environment. */
JACSYZ_API int jacsyz_config_load_environment(jacsyz_config* cfg);

/* Analysis of one curve. cfg may be NULL for defaults. */
JACSYZ_API int jacsyz_analyze(const char* poly, const jacsyz_config* cfg, jacsyz_analysis** out);
JACSYZ_API void jacsyz_analysis_free(jacsyz_analysis* a);
JACSYZ_API int jacsyz_analysis_degree(const jacsyz_analysis* a);
JACSYZ_API int jacsyz_analysis_mdr(const jacsyz_analysis* a);
JACSYZ_API int jacsyz_analysis_m(const jacsyz_analysis* a);
JACSYZ_API long long jacsyz_analysis_tau(const jacsyz_analysis* a);
/* Copy up to cap values into buf; return the full count. */
JACSYZ_API size_t jacsyz_analysis_exponents(const jacsyz_analysis* a, int* buf, size_t cap);
JACSYZ_API size_t jacsyz_analysis_relation_degrees(const jacsyz_analysis* a, int* buf, size_t cap);
JACSYZ_API size_t jacsyz_analysis_epsilons(const jacsyz_analysis* a, int* buf, size_t cap);
/* Returns 1 and stores delta_m for curves of type (d,r,m), else 0. */
JACSYZ_API int jacsyz_analysis_delta_m(const jacsyz_analysis* a, int* out);
JACSYZ_API unsigned jacsyz_analysis_verdicts(const jacsyz_analysis* a);
JACSYZ_API int jacsyz_analysis_checks_pass(const jacsyz_analysis* a);
/* Rendered report, text or JSON; timing is left out unless requested. */
JACSYZ_API int jacsyz_analysis_report(const jacsyz_analysis* a, int json, int timing, char** out);

/* Table of dim M(f)_k, dim D0(f)_k (and n(f)_k with saturation on). */
JACSYZ_API int jacsyz_hilbert(const char* poly, const jacsyz_config* cfg, int json, char** out);

/* Family member as factored text. param is 'd' or 'k'. */
JACSYZ_API int jacsyz_family(const char* name, char param, int value, uint64_t seed, char** out);
/* One line per family: name, parameter and range, description. */
JACSYZ_API int jacsyz_family_list(char** out);

/* Registry verification. registry and glob may be NULL (shipped registry,
 * every entry). all != 0 includes instances above degree 13. on_line, if
 * set, receives one MATCH/MISMATCH/ERROR line per entry as it finishes. */
JACSYZ_API int jacsyz_verify_paper(const char* registry, const char* glob, int all,
                                   const jacsyz_config* cfg, jacsyz_line_fn on_line, void* user,
                                   jacsyz_verify_run** out);
JACSYZ_API void jacsyz_verify_free(jacsyz_verify_run* run);
JACSYZ_API size_t jacsyz_verify_count(const jacsyz_verify_run* run);
JACSYZ_API const char* jacsyz_verify_entry_id(const jacsyz_verify_run* run, size_t i);
/* "MATCH", "MISMATCH" or "ERROR". */
JACSYZ_API const char* jacsyz_verify_entry_status(const jacsyz_verify_run* run, size_t i);
JACSYZ_API int jacsyz_verify_entry_flagged(const jacsyz_verify_run* run, size_t i);
/* 1 iff every entry not flagged as a suspected typo matches. */
JACSYZ_API int jacsyz_verify_ok(const jacsyz_verify_run* run);
JACSYZ_API int jacsyz_verify_report(const jacsyz_verify_run* run, int json, char** out);

/* Search for certified curves of type (d,r,m). pool, templates and store
 * may be NULL (default pool, shipped templates, no store). on_line
 * receives each certificate as a JSON line. */
JACSYZ_API int jacsyz_search(int d, int r, int m, const char* pool, int budget, const char* templates,
                             const char* store, const jacsyz_config* cfg, jacsyz_line_fn on_line,
                             void* user, jacsyz_search_run** out);
JACSYZ_API void jacsyz_search_free(jacsyz_search_run* run);
JACSYZ_API size_t jacsyz_search_count(const jacsyz_search_run* run);
JACSYZ_API const char* jacsyz_search_certificate(const jacsyz_search_run* run, size_t i);
JACSYZ_API int jacsyz_search_candidates(const jacsyz_search_run* run);
/* Summary line: candidates, duplicates, prefilter passes, certificates. */
JACSYZ_API int jacsyz_search_summary(const jacsyz_search_run* run, char** out);

#ifdef __cplusplus
}
#endif

#endif /* JACSYZ_JACSYZ_H */
