// Copyright 2026 The sncqa-bench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SNCQA_SNCQA_H_
#define SNCQA_SNCQA_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SNCQA_BUILDING_LIBRARY)
#define SNCQA_API __declspec(dllexport)
#else
#define SNCQA_API __declspec(dllimport)
#endif
#else
#define SNCQA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sncqa_status {
  SNCQA_OK = 0,
  SNCQA_ERR_INVALID_ARGUMENT = 1,
  SNCQA_ERR_CONFIG = 2,
  SNCQA_ERR_CAPACITY = 3,
  SNCQA_ERR_IO = 4,
  SNCQA_ERR_INTERNAL = 5,
  /* The command finished but no seed converged under require_converged. */
  SNCQA_NOT_CONVERGED = 6
} sncqa_status;

typedef struct sncqa_config sncqa_config;
typedef struct sncqa_result sncqa_result;

typedef struct sncqa_run_options {
  const char* out_dir;     /* NULL: the config's output directory */
  const uint64_t* seeds;   /* NULL: the config's seeds */
  size_t num_seeds;
  int require_converged;
  int n_max;               /* scaling only; 0 means 100 */
  const char* suite;       /* benchmark only; NULL means "unfrustrated" */
  int workers;             /* 0: the config's worker count */
} sncqa_run_options;

SNCQA_API const char* sncqa_version(void);

/* Message for the last failing call on this thread; empty if none. */
SNCQA_API const char* sncqa_last_error(void);

SNCQA_API const char* sncqa_status_string(sncqa_status status);

SNCQA_API sncqa_status sncqa_config_default(sncqa_config** out);
SNCQA_API sncqa_status sncqa_config_from_json(const char* text, sncqa_config** out);
SNCQA_API sncqa_status sncqa_config_from_file(const char* path, sncqa_config** out);
SNCQA_API void sncqa_config_free(sncqa_config* config);

/* Fully resolved config as JSON. The string lives as long as the handle. */
SNCQA_API const char* sncqa_config_json(const sncqa_config* config);

SNCQA_API void sncqa_run_options_init(sncqa_run_options* options);

/* command: exact, vqe, benchmark, scaling, resources or noise. */
SNCQA_API sncqa_status sncqa_run(const sncqa_config* config, const char* command,
                                 const sncqa_run_options* options, sncqa_result** out);

/* Summary JSON of a finished command. */
SNCQA_API const char* sncqa_result_summary(const sncqa_result* result);
SNCQA_API size_t sncqa_result_file_count(const sncqa_result* result);
SNCQA_API const char* sncqa_result_file(const sncqa_result* result, size_t index);
SNCQA_API int sncqa_result_converged(const sncqa_result* result);
SNCQA_API void sncqa_result_free(sncqa_result* result);

/* Ground-state energy of the open rows x cols J1-J2 model, Pauli convention. */
SNCQA_API sncqa_status sncqa_exact_energy(int rows, int cols, double j1, double j2, double* energy);

/* Decimal string of C(n, k) - C(n, k - 1). Returns the length needed,
 * excluding the terminator, in *needed; writes at most len bytes. */
SNCQA_API sncqa_status sncqa_irrep_dim(int n, int k, char* buffer, size_t len, size_t* needed);

#ifdef __cplusplus
}
#endif

#endif /* SNCQA_SNCQA_H_ */
