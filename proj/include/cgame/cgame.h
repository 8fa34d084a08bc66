/* Copyright 2026 The cgame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define CG_API __attribute__((visibility("default")))

typedef enum cg_status {
  CG_OK = 0,
  CG_INVALID_ARGUMENT,
  CG_SIZE_LIMIT_EXCEEDED,
  CG_CYCLE_DETECTED,
  CG_NON_COVERING_EDGE,
  CG_CONFLICT_NOT_INHERITED,
  CG_NOT_NEGATIVE,
  CG_NOT_FORESTIAL,
  CG_ARITY_MISMATCH,
  CG_DIMENSION_MISMATCH,
  CG_NOT_REPRESENTABLE,
  CG_NO_FACTORIZATION,
  CG_NON_UNIQUE_FACTORIZATION,
  CG_NO_SOLUTION,
  CG_NON_UNIQUE,
  CG_AMBIGUOUS_BEYOND_SYMMETRY,
  CG_BIJECTION_FAILURE,
  CG_THEOREM_VIOLATION,
  CG_PARSE_ERROR,
  CG_INTERNAL
} cg_status;

typedef struct cg_options cg_options;
typedef struct cg_scenario cg_scenario;
typedef struct cg_result cg_result;

CG_API const char* cg_status_name(cg_status status);
/* Message of the last failing call on this thread. */
CG_API const char* cg_last_error(void);

CG_API size_t cg_fixture_count(void);
CG_API const char* cg_fixture_name(size_t index);

CG_API cg_options* cg_options_new(void);
CG_API void cg_options_free(cg_options* opts);
/* Overrides every exponential copy bound; 0 keeps the declared ones. */
CG_API cg_status cg_options_set_bound(cg_options* opts, int bound);
CG_API cg_status cg_options_set_strict(cg_options* opts, int strict);
CG_API cg_status cg_options_set_cap(cg_options* opts, size_t cap);
/* Representative file, read when a command runs; NULL for automatic. */
CG_API cg_status cg_options_set_atlas_file(cg_options* opts, const char* path);

/* source is a fixture name or a file path. opts may be NULL. */
CG_API cg_status cg_scenario_load(const char* source, const cg_options* opts,
                                  cg_scenario** out);
CG_API cg_status cg_scenario_parse(const char* text, cg_scenario** out);
CG_API void cg_scenario_free(cg_scenario* sc);
/* Canonical text of the scenario, owned by sc. */
CG_API const char* cg_scenario_text(const cg_scenario* sc);
CG_API size_t cg_scenario_command_count(const cg_scenario* sc);

/* words[0] is the command: validate, classes, canonical, collapse, compose,
 * check-theorem, wit, deadlock or run. Check failures are reported through
 * the result exit code, not the status. */
CG_API cg_status cg_run(const cg_scenario* sc, const char* const* words, size_t count,
                        const cg_options* opts, cg_result** out);
CG_API cg_status cg_repro(const char* fixture, const cg_options* opts, cg_result** out);

/* 0 all checks pass, 1 check failure, 2 usage or parse error. */
CG_API int cg_result_exit_code(const cg_result* r);
CG_API const char* cg_result_text(const cg_result* r);
/* Flat key=value records, one per line. */
CG_API const char* cg_result_records(const cg_result* r);
CG_API void cg_result_free(cg_result* r);

#ifdef __cplusplus
}
#endif
