// Copyright 2026 The angdef Authors
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

#ifndef ANGDEF_ANGDEF_H_
#define ANGDEF_ANGDEF_H_

#include <stddef.h>
#include <stdint.h>

#if defined(ANGDEF_BUILDING)
#define ANGDEF_API __attribute__((visibility("default")))
#else
#define ANGDEF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum angdef_status {
  ANGDEF_OK = 0,
  ANGDEF_INVALID_ARGUMENT = 1,
  ANGDEF_BOUNDARY_VERTEX = 2,
  ANGDEF_NON_MANIFOLD_VERTEX = 3,
  ANGDEF_DEGENERATE_TRIANGLE = 4,
  ANGDEF_ILL_CONDITIONED = 5,
  ANGDEF_INVALID_RECURRENCE = 6,
  ANGDEF_DEGENERATE_BASIS = 7,
  ANGDEF_DEGENERATE_INPUT = 8,
  ANGDEF_PARSE_ERROR = 9,
  ANGDEF_UNSUPPORTED_POLYGON = 10,
  ANGDEF_IO_ERROR = 11,
  ANGDEF_CONFIG_ERROR = 12,
  ANGDEF_INTERNAL_ERROR = 13
} angdef_status;

// Bit i selects scheme i in the order G1, G2, G3, G4, G5, H1.
enum {
  ANGDEF_SCHEME_G1 = 1u << 0,
  ANGDEF_SCHEME_G2 = 1u << 1,
  ANGDEF_SCHEME_G3 = 1u << 2,
  ANGDEF_SCHEME_G4 = 1u << 3,
  ANGDEF_SCHEME_G5 = 1u << 4,
  ANGDEF_SCHEME_H1 = 1u << 5,
  ANGDEF_SCHEME_ALL = 0x3fu
};

typedef enum angdef_format { ANGDEF_FORMAT_CSV = 0, ANGDEF_FORMAT_JSON = 1 } angdef_format;
typedef enum angdef_mesh_format { ANGDEF_MESH_OBJ = 0, ANGDEF_MESH_OFF = 1 } angdef_mesh_format;

typedef enum angdef_experiment {
  ANGDEF_EXPERIMENT_TABLE1 = 0,
  ANGDEF_EXPERIMENT_TABLE2 = 1,
  ANGDEF_EXPERIMENT_PARALLELOGRAM = 2,
  ANGDEF_EXPERIMENT_COUNTEREXAMPLE = 3
} angdef_experiment;

// Per-vertex flags, matching the `flag` column of estimate reports.
typedef enum angdef_vertex_flag {
  ANGDEF_FLAG_OK = 0,
  ANGDEF_FLAG_BOUNDARY_SKIPPED = 1,
  ANGDEF_FLAG_NON_MANIFOLD = 2,
  ANGDEF_FLAG_DEGENERATE = 3,
  ANGDEF_FLAG_ILL_CONDITIONED = 4
} angdef_vertex_flag;

typedef struct angdef_mesh angdef_mesh;
typedef struct angdef_report angdef_report;
typedef struct angdef_table angdef_table;

// Message of the last failure on the calling thread; empty after success.
ANGDEF_API const char* angdef_last_error(void);
ANGDEF_API const char* angdef_status_name(angdef_status status);

// Meshes. `format` < 0 picks the reader from the file extension.
ANGDEF_API angdef_status angdef_mesh_read(const char* path, int format, angdef_mesh** out);
ANGDEF_API angdef_status angdef_mesh_create(const double* xyz, size_t vertex_count,
                                            const uint32_t* tris, size_t triangle_count,
                                            angdef_mesh** out);
// Convex hull of `n` seeded uniform points on the unit sphere.
ANGDEF_API angdef_status angdef_mesh_sphere(size_t n, uint64_t seed, angdef_mesh** out);
ANGDEF_API angdef_status angdef_mesh_write(const angdef_mesh* mesh, const char* path,
                                           angdef_mesh_format format);
ANGDEF_API size_t angdef_mesh_vertex_count(const angdef_mesh* mesh);
ANGDEF_API size_t angdef_mesh_triangle_count(const angdef_mesh* mesh);
ANGDEF_API void angdef_mesh_free(angdef_mesh* mesh);

// Per-vertex curvature estimates.
ANGDEF_API angdef_status angdef_estimate(const angdef_mesh* mesh, uint32_t scheme_mask,
                                         angdef_report** out);
// `scheme_bit` is one ANGDEF_SCHEME_* value. `value` is NaN unless the flag
// is ANGDEF_FLAG_OK.
ANGDEF_API angdef_status angdef_report_value(const angdef_report* report, size_t vertex,
                                             uint32_t scheme_bit, double* value,
                                             angdef_vertex_flag* flag);
// Serialized text is owned by the caller; release it with angdef_string_free.
ANGDEF_API angdef_status angdef_report_format(const angdef_report* report,
                                              angdef_format format, char** out);
ANGDEF_API void angdef_report_free(angdef_report* report);

// Experiments. Array fields left NULL (or with zero length) keep the
// defaults of the chosen experiment; scheme_mask 0 keeps its default set.
typedef struct angdef_experiment_config {
  angdef_experiment experiment;
  const int* valences;
  size_t valence_count;
  const double* levels;
  size_t level_count;
  const size_t* sizes;
  size_t size_count;
  const double* c_values;
  size_t c_value_count;
  size_t samples;            // 0 keeps the default
  double coefficient_range;  // <= 0 keeps the default
  uint64_t seed;
  int has_seed;
  uint32_t scheme_mask;
} angdef_experiment_config;

ANGDEF_API void angdef_experiment_config_init(angdef_experiment_config* cfg,
                                              angdef_experiment experiment);
ANGDEF_API angdef_status angdef_run_experiment(const angdef_experiment_config* cfg,
                                               angdef_table** out);
// Runs the experiment described by a JSON config. `format` receives the
// output format named in the config and may be NULL.
ANGDEF_API angdef_status angdef_run_config_json(const char* json_text, angdef_table** out,
                                                angdef_format* format);
ANGDEF_API angdef_status angdef_table_format(const angdef_table* table,
                                             angdef_format format, char** out);
ANGDEF_API size_t angdef_table_row_count(const angdef_table* table);
// Looks up a named summary scalar, e.g. "irreducible_error_G2".
ANGDEF_API angdef_status angdef_table_summary(const angdef_table* table, const char* key,
                                              double* value);
ANGDEF_API void angdef_table_free(angdef_table* table);

// Least-squares slope of log(errors) against log(etas). `exact_zero` (may
// be NULL) is set when some error is 0 and the slope is +inf.
ANGDEF_API angdef_status angdef_fit_order(const double* errors, const double* etas,
                                          size_t count, double* slope, int* exact_zero);

ANGDEF_API void angdef_string_free(char* text);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // ANGDEF_ANGDEF_H_
