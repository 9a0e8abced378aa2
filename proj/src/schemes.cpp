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

#include "angdef/schemes.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "angdef/error.hpp"

namespace angdef {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double checked_ratio(double numerator, double denominator, double floor,
                     const char* what) {
  if (!(std::abs(denominator) >= floor) || denominator == 0.0) {
    throw Error(ErrorCode::kIllConditioned,
                std::string(what) + " denominator below conditioning floor");
  }
  return numerator / denominator;
}

}  // namespace

std::string_view to_string(SchemeId id) {
  switch (id) {
    case SchemeId::kG1: return "G1";
    case SchemeId::kG2: return "G2";
    case SchemeId::kG3: return "G3";
    case SchemeId::kG4: return "G4";
    case SchemeId::kG5: return "G5";
    case SchemeId::kH1: return "H1";
  }
  return "?";
}

std::optional<SchemeId> parse_scheme(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  for (auto id : kAllSchemes) {
    if (to_string(id) == upper) return id;
  }
  return std::nullopt;
}

std::string_view to_string(VertexFlag flag) {
  switch (flag) {
    case VertexFlag::kOk: return "ok";
    case VertexFlag::kBoundarySkipped: return "boundary_skipped";
    case VertexFlag::kNonManifold: return "non_manifold";
    case VertexFlag::kDegenerate: return "degenerate";
    case VertexFlag::kIllConditioned: return "ill_conditioned";
  }
  return "?";
}

double g1(const StarQuantities& q) {
  return checked_ratio(3.0 * angular_defect(q), fan_area(q),
                       q.conditioning_floor(), "G1");
}

double g2(const StarQuantities& q) {
  return checked_ratio(angular_defect(q), module_sp(q), q.conditioning_floor(),
                       "G2");
}

double g3(const StarQuantities& q) {
  return checked_ratio(angular_defect(q), modified_denominator(q),
                       q.conditioning_floor(), "G3");
}

double g4(const StarQuantities& q, VoronoiRule rule) {
  return checked_ratio(angular_defect(q), voronoi_area(q, rule),
                       q.conditioning_floor(), "G4");
}

double h1(const StarQuantities& q) {
  Point3 weighted;
  double denominator = 0.0;
  for (std::size_t i = 0; i < q.n; ++i) {
    const double w = q.cot_alpha[i] + q.cot_delta[i];
    weighted += w * q.spokes[i];
    denominator += w * q.eta[i] * q.eta[i];
  }
  return checked_ratio(2.0 * norm(weighted), std::abs(denominator),
                       q.conditioning_floor(), "H1");
}

double g5(const StarQuantities& q) {
  // 2A - S_p vanishes to leading order at valence 3.
  if (q.n == 3) {
    throw Error(ErrorCode::kIllConditioned,
                "G5 is undefined at valence 3 (2A - S_p degenerates)");
  }
  const double a = aniso_area(q);
  const double s = module_sp(q);
  const double h = h1(q);
  return checked_ratio(angular_defect(q) - 2.0 * (s - a) * h * h, 2.0 * a - s,
                       q.conditioning_floor(), "G5");
}

double g1(const OneRingFan& fan) { return g1(star_quantities(fan)); }
double g2(const OneRingFan& fan) { return g2(star_quantities(fan)); }
double g3(const OneRingFan& fan) { return g3(star_quantities(fan)); }
double g4(const OneRingFan& fan, VoronoiRule rule) {
  return g4(star_quantities(fan), rule);
}
double g5(const OneRingFan& fan) { return g5(star_quantities(fan)); }
double h1(const OneRingFan& fan) { return h1(star_quantities(fan)); }

double evaluate(SchemeId id, const StarQuantities& q) {
  switch (id) {
    case SchemeId::kG1: return g1(q);
    case SchemeId::kG2: return g2(q);
    case SchemeId::kG3: return g3(q);
    case SchemeId::kG4: return g4(q);
    case SchemeId::kG5: return g5(q);
    case SchemeId::kH1: return h1(q);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown scheme id");
}

PrincipalCurvatures principal_curvatures(double h, double g) {
  const double radicand = h * h - g;
  PrincipalCurvatures out;
  out.clamped = radicand < 0.0;
  const double root = out.clamped ? 0.0 : std::sqrt(radicand);
  out.k_min = h - root;
  out.k_max = h + root;
  return out;
}

RegularClosedForms regular_closed_forms(int n, double eta) {
  if (n < 3 || !(eta > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "regular_closed_forms needs n >= 3 and eta > 0");
  }
  const double nn = n;
  const double theta = 2.0 * std::numbers::pi / nn;
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double c2 = std::cos(2.0 * theta);
  const double e2 = eta * eta;
  RegularClosedForms f;
  f.a = (2.0 * nn - nn * c2 - nn * c) * e2 / (16.0 * s);
  f.s_p = nn * (1.0 - c) * e2 / (4.0 * s);
  f.b = (nn + 0.5 * nn * c2 - 1.5 * nn * c) * e2 / (16.0 * s);
  return f;
}

CurvatureReport::CurvatureReport(std::vector<SchemeId> schemes,
                                 std::size_t vertex_count)
    : schemes_(std::move(schemes)),
      vertex_count_(vertex_count),
      values_(schemes_.size() * vertex_count,
              SchemeValue{kNaN, VertexFlag::kOk}) {}

const SchemeValue& CurvatureReport::at(std::size_t vertex,
                                       std::size_t scheme_slot) const {
  return values_.at(vertex * schemes_.size() + scheme_slot);
}

SchemeValue& CurvatureReport::at(std::size_t vertex, std::size_t scheme_slot) {
  return values_.at(vertex * schemes_.size() + scheme_slot);
}

std::optional<std::size_t> CurvatureReport::slot(SchemeId id) const {
  auto it = std::find(schemes_.begin(), schemes_.end(), id);
  if (it == schemes_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - schemes_.begin());
}

namespace {

VertexFlag flag_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBoundaryVertex: return VertexFlag::kBoundarySkipped;
    case ErrorCode::kNonManifoldVertex: return VertexFlag::kNonManifold;
    case ErrorCode::kIllConditioned: return VertexFlag::kIllConditioned;
    default: return VertexFlag::kDegenerate;
  }
}

}  // namespace

CurvatureReport estimate_mesh(const TriangleMesh& mesh,
                              std::span<const SchemeId> schemes) {
  std::vector<SchemeId> unique;
  for (auto id : schemes) {
    if (std::find(unique.begin(), unique.end(), id) == unique.end()) {
      unique.push_back(id);
    }
  }
  CurvatureReport report(unique, mesh.vertex_count());
  for (std::size_t v = 0; v < mesh.vertex_count(); ++v) {
    std::optional<StarQuantities> q;
    try {
      q = star_quantities(build_one_ring(mesh, static_cast<std::uint32_t>(v)));
    } catch (const Error& e) {
      const auto flag = flag_for(e.code());
      for (std::size_t s = 0; s < unique.size(); ++s) {
        report.at(v, s) = {kNaN, flag};
      }
      continue;
    }
    for (std::size_t s = 0; s < unique.size(); ++s) {
      try {
        const double value = evaluate(unique[s], *q);
        report.at(v, s) = std::isfinite(value)
                              ? SchemeValue{value, VertexFlag::kOk}
                              : SchemeValue{kNaN, VertexFlag::kIllConditioned};
      } catch (const Error& e) {
        report.at(v, s) = {kNaN, flag_for(e.code())};
      }
    }
  }
  return report;
}

}  // namespace angdef
