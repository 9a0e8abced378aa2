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

#include "angdef/angdef.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <new>
#include <string>
#include <vector>

#include "angdef/bench.hpp"
#include "angdef/error.hpp"
#include "angdef/hull.hpp"
#include "angdef/mesh.hpp"
#include "angdef/mesh_io.hpp"
#include "angdef/schemes.hpp"

struct angdef_mesh {
  angdef::TriangleMesh mesh;
};

struct angdef_report {
  angdef::CurvatureReport report;
};

struct angdef_table {
  angdef::ErrorTable table;
};

namespace {

thread_local std::string g_last_error;

angdef_status status_of(angdef::ErrorCode code) {
  return static_cast<angdef_status>(static_cast<int>(code) + 1);
}

// Runs `body`, translating exceptions into status codes and the thread-local
// message.
template <typename F>
angdef_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return ANGDEF_OK;
  } catch (const angdef::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return ANGDEF_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ANGDEF_INTERNAL_ERROR;
  }
}

angdef_status null_argument(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return ANGDEF_INVALID_ARGUMENT;
}

std::vector<angdef::SchemeId> schemes_from_mask(uint32_t mask) {
  if (mask & ~static_cast<uint32_t>(ANGDEF_SCHEME_ALL)) {
    throw angdef::Error(angdef::ErrorCode::kInvalidArgument, "unknown scheme bits");
  }
  std::vector<angdef::SchemeId> out;
  for (auto id : angdef::kAllSchemes) {
    if (mask & (1u << static_cast<unsigned>(id))) out.push_back(id);
  }
  return out;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

angdef::OutputFormat output_format(angdef_format f) {
  if (f == ANGDEF_FORMAT_CSV) return angdef::OutputFormat::kCsv;
  if (f == ANGDEF_FORMAT_JSON) return angdef::OutputFormat::kJson;
  throw angdef::Error(angdef::ErrorCode::kInvalidArgument, "unknown output format");
}

}  // namespace

extern "C" {

const char* angdef_last_error(void) { return g_last_error.c_str(); }

const char* angdef_status_name(angdef_status status) {
  if (status == ANGDEF_OK) return "Ok";
  if (status == ANGDEF_INTERNAL_ERROR) return "Internal";
  if (status > ANGDEF_OK && status < ANGDEF_INTERNAL_ERROR) {
    // to_string returns views of string literals, so data() is terminated.
    return angdef::to_string(static_cast<angdef::ErrorCode>(status - 1)).data();
  }
  return "Unknown";
}

angdef_status angdef_mesh_read(const char* path, int format, angdef_mesh** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] {
    auto mesh = format < 0 ? angdef::read_mesh(path)
                           : angdef::read_mesh(path, format == ANGDEF_MESH_OFF
                                                         ? angdef::MeshFormat::kOff
                                                         : angdef::MeshFormat::kObj);
    *out = new angdef_mesh{std::move(mesh)};
  });
}

angdef_status angdef_mesh_create(const double* xyz, size_t vertex_count,
                                 const uint32_t* tris, size_t triangle_count,
                                 angdef_mesh** out) {
  if (!out) return null_argument("out");
  if (!xyz && vertex_count) return null_argument("xyz");
  if (!tris && triangle_count) return null_argument("tris");
  return guarded([&] {
    std::vector<angdef::Point3> vertices(vertex_count);
    for (size_t i = 0; i < vertex_count; ++i) {
      vertices[i] = {xyz[3 * i], xyz[3 * i + 1], xyz[3 * i + 2]};
    }
    std::vector<angdef::Triangle> triangles(triangle_count);
    for (size_t i = 0; i < triangle_count; ++i) {
      triangles[i] = {tris[3 * i], tris[3 * i + 1], tris[3 * i + 2]};
    }
    *out = new angdef_mesh{angdef::TriangleMesh(std::move(vertices), std::move(triangles))};
  });
}

angdef_status angdef_mesh_sphere(size_t n, uint64_t seed, angdef_mesh** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new angdef_mesh{angdef::convex_hull(angdef::sample_uniform_sphere(n, seed))};
  });
}

angdef_status angdef_mesh_write(const angdef_mesh* mesh, const char* path,
                                angdef_mesh_format format) {
  if (!mesh) return null_argument("mesh");
  if (!path) return null_argument("path");
  return guarded([&] {
    angdef::write_mesh(path, mesh->mesh,
                       format == ANGDEF_MESH_OFF ? angdef::MeshFormat::kOff
                                                 : angdef::MeshFormat::kObj);
  });
}

size_t angdef_mesh_vertex_count(const angdef_mesh* mesh) {
  return mesh ? mesh->mesh.vertex_count() : 0;
}

size_t angdef_mesh_triangle_count(const angdef_mesh* mesh) {
  return mesh ? mesh->mesh.triangle_count() : 0;
}

void angdef_mesh_free(angdef_mesh* mesh) { delete mesh; }

angdef_status angdef_estimate(const angdef_mesh* mesh, uint32_t scheme_mask,
                              angdef_report** out) {
  if (!mesh) return null_argument("mesh");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto schemes = schemes_from_mask(scheme_mask);
    if (schemes.empty()) {
      throw angdef::Error(angdef::ErrorCode::kInvalidArgument, "no scheme selected");
    }
    *out = new angdef_report{angdef::estimate_mesh(mesh->mesh, schemes)};
  });
}

angdef_status angdef_report_value(const angdef_report* report, size_t vertex,
                                  uint32_t scheme_bit, double* value,
                                  angdef_vertex_flag* flag) {
  if (!report) return null_argument("report");
  return guarded([&] {
    const auto ids = schemes_from_mask(scheme_bit);
    if (ids.size() != 1) {
      throw angdef::Error(angdef::ErrorCode::kInvalidArgument,
                          "scheme_bit must select exactly one scheme");
    }
    const auto slot = report->report.slot(ids.front());
    if (!slot) {
      throw angdef::Error(angdef::ErrorCode::kInvalidArgument,
                          "scheme was not estimated");
    }
    if (vertex >= report->report.vertex_count()) {
      throw angdef::Error(angdef::ErrorCode::kInvalidArgument, "vertex out of range");
    }
    const auto& sv = report->report.at(vertex, *slot);
    if (value) *value = sv.value;
    if (flag) *flag = static_cast<angdef_vertex_flag>(sv.flag);
  });
}

angdef_status angdef_report_format(const angdef_report* report, angdef_format format,
                                   char** out) {
  if (!report) return null_argument("report");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = copy_string(angdef::format_report(report->report, output_format(format)));
  });
}

void angdef_report_free(angdef_report* report) { delete report; }

void angdef_experiment_config_init(angdef_experiment_config* cfg,
                                   angdef_experiment experiment) {
  if (!cfg) return;
  *cfg = angdef_experiment_config{};
  cfg->experiment = experiment;
}

angdef_status angdef_run_experiment(const angdef_experiment_config* cfg,
                                    angdef_table** out) {
  if (!cfg) return null_argument("cfg");
  if (!out) return null_argument("out");
  return guarded([&] {
    if (cfg->experiment < ANGDEF_EXPERIMENT_TABLE1 ||
        cfg->experiment > ANGDEF_EXPERIMENT_COUNTEREXAMPLE) {
      throw angdef::Error(angdef::ErrorCode::kConfig, "unknown experiment");
    }
    auto c = angdef::ExperimentConfig::defaults(
        static_cast<angdef::ExperimentKind>(cfg->experiment));
    if (cfg->valences && cfg->valence_count) {
      c.valences.assign(cfg->valences, cfg->valences + cfg->valence_count);
    }
    if (cfg->levels && cfg->level_count) {
      c.levels.assign(cfg->levels, cfg->levels + cfg->level_count);
    }
    if (cfg->sizes && cfg->size_count) {
      c.sphere_sizes.assign(cfg->sizes, cfg->sizes + cfg->size_count);
    }
    if (cfg->c_values && cfg->c_value_count) {
      c.c_values.assign(cfg->c_values, cfg->c_values + cfg->c_value_count);
    }
    if (cfg->samples) c.samples = cfg->samples;
    if (cfg->coefficient_range > 0.0) c.coefficient_range = cfg->coefficient_range;
    if (cfg->has_seed) c.seed = cfg->seed;
    if (cfg->scheme_mask) c.schemes = schemes_from_mask(cfg->scheme_mask);
    *out = new angdef_table{angdef::run_experiment(c)};
  });
}

angdef_status angdef_run_config_json(const char* json_text, angdef_table** out,
                                     angdef_format* format) {
  if (!json_text) return null_argument("json_text");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto cfg = angdef::parse_config(json_text);
    *out = new angdef_table{angdef::run_experiment(cfg)};
    if (format) {
      *format = cfg.format == angdef::OutputFormat::kJson ? ANGDEF_FORMAT_JSON
                                                          : ANGDEF_FORMAT_CSV;
    }
  });
}

angdef_status angdef_table_format(const angdef_table* table, angdef_format format,
                                  char** out) {
  if (!table) return null_argument("table");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = copy_string(angdef::format_table(table->table, output_format(format)));
  });
}

size_t angdef_table_row_count(const angdef_table* table) {
  return table ? table->table.rows.size() : 0;
}

angdef_status angdef_table_summary(const angdef_table* table, const char* key,
                                   double* value) {
  if (!table) return null_argument("table");
  if (!key) return null_argument("key");
  if (!value) return null_argument("value");
  return guarded([&] {
    const auto v = table->table.summary_value(key);
    if (!v) {
      throw angdef::Error(angdef::ErrorCode::kInvalidArgument,
                          std::string("no summary value '") + key + "'");
    }
    *value = *v;
  });
}

void angdef_table_free(angdef_table* table) { delete table; }

angdef_status angdef_fit_order(const double* errors, const double* etas, size_t count,
                               double* slope, int* exact_zero) {
  if (!errors) return null_argument("errors");
  if (!etas) return null_argument("etas");
  if (!slope) return null_argument("slope");
  return guarded([&] {
    const auto fit = angdef::fit_order({errors, count}, {etas, count});
    *slope = fit.slope;
    if (exact_zero) *exact_zero = fit.exact_zero ? 1 : 0;
  });
}

void angdef_string_free(char* text) { delete[] text; }

}  // extern "C"
