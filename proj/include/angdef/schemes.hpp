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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "angdef/geometry.hpp"
#include "angdef/mesh.hpp"

namespace angdef {

enum class SchemeId : std::uint8_t { kG1, kG2, kG3, kG4, kG5, kH1 };

inline constexpr SchemeId kAllSchemes[] = {SchemeId::kG1, SchemeId::kG2,
                                           SchemeId::kG3, SchemeId::kG4,
                                           SchemeId::kG5, SchemeId::kH1};

std::string_view to_string(SchemeId id);
// Accepts "G1".."G5", "H1" (case-insensitive).
std::optional<SchemeId> parse_scheme(std::string_view name);

// Gaussian-curvature estimators. Each divides the angular defect by an
// area-like quantity:
//   g1: fan_area / 3
//   g2: module_sp
//   g3: modified_denominator (algebraically equal to g2)
//   g4: voronoi_area
//   g5: corrects the defect with the squared mean curvature from h1, using
//       aniso_area and module_sp
// g2..g5 throw kIllConditioned when |denominator| < q.conditioning_floor().
double g1(const StarQuantities& q);
double g2(const StarQuantities& q);
double g3(const StarQuantities& q);
double g4(const StarQuantities& q,
          VoronoiRule rule = VoronoiRule::kCircumcentric);
double g5(const StarQuantities& q);

// Unsigned cotangent-weighted mean curvature,
//   2 |sum w_i (p_i - p)| / sum w_i eta_i^2,  w_i = cot alpha_i + cot delta_i.
double h1(const StarQuantities& q);

double g1(const OneRingFan& fan);
double g2(const OneRingFan& fan);
double g3(const OneRingFan& fan);
double g4(const OneRingFan& fan,
          VoronoiRule rule = VoronoiRule::kCircumcentric);
double g5(const OneRingFan& fan);
double h1(const OneRingFan& fan);

double evaluate(SchemeId id, const StarQuantities& q);

struct PrincipalCurvatures {
  double k_min = 0.0;
  double k_max = 0.0;
  // Set when h^2 < g and the radicand was clamped to zero.
  bool clamped = false;
};

PrincipalCurvatures principal_curvatures(double h, double g);

// Leading-order values of aniso_area, module_sp and the principal-curvature
// coefficient of the defect at a regular vertex of valence n and edge eta.
struct RegularClosedForms {
  double a = 0.0;
  double s_p = 0.0;
  double b = 0.0;
};

RegularClosedForms regular_closed_forms(int n, double eta);

enum class VertexFlag : std::uint8_t {
  kOk,
  kBoundarySkipped,
  kNonManifold,
  kDegenerate,
  kIllConditioned,
};

std::string_view to_string(VertexFlag flag);

struct SchemeValue {
  double value = 0.0;  // NaN unless flag == kOk
  VertexFlag flag = VertexFlag::kOk;
};

// Vertex-major table of scheme values.
class CurvatureReport {
 public:
  CurvatureReport(std::vector<SchemeId> schemes, std::size_t vertex_count);

  std::span<const SchemeId> schemes() const noexcept { return schemes_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }

  const SchemeValue& at(std::size_t vertex, std::size_t scheme_slot) const;
  SchemeValue& at(std::size_t vertex, std::size_t scheme_slot);
  // Slot of `id` in schemes(), or nullopt when it was not requested.
  std::optional<std::size_t> slot(SchemeId id) const;

 private:
  std::vector<SchemeId> schemes_;
  std::size_t vertex_count_;
  std::vector<SchemeValue> values_;
};

// Evaluates every requested scheme at every vertex. Vertices whose fan
// cannot be built or whose denominators fall below the floor are flagged,
// never dropped. Duplicate scheme ids are collapsed, order preserved.
CurvatureReport estimate_mesh(const TriangleMesh& mesh,
                              std::span<const SchemeId> schemes);

}  // namespace angdef
