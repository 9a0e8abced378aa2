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

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace angdef {

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Point3& operator+=(const Point3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Point3& operator-=(const Point3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Point3& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }
  friend constexpr bool operator==(const Point3&, const Point3&) = default;
};

constexpr Point3 operator+(Point3 a, const Point3& b) { return a += b; }
constexpr Point3 operator-(Point3 a, const Point3& b) { return a -= b; }
constexpr Point3 operator-(const Point3& a) { return {-a.x, -a.y, -a.z}; }
constexpr Point3 operator*(Point3 a, double s) { return a *= s; }
constexpr Point3 operator*(double s, Point3 a) { return a *= s; }

constexpr double dot(const Point3& a, const Point3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
constexpr Point3 cross(const Point3& a, const Point3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Point3& a) { return std::sqrt(dot(a, a)); }
inline double distance(const Point3& a, const Point3& b) { return norm(a - b); }
inline bool is_finite(const Point3& a) {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

// Unsigned angle between two vectors, via atan2(|a x b|, a . b).
inline double angle_between(const Point3& a, const Point3& b) {
  return std::atan2(norm(cross(a, b)), dot(a, b));
}

// A vertex together with its cyclically ordered one-ring. Triangle i is
// (center, neighbors[i], neighbors[(i+1) % n]); indices wrap in both
// directions.
class OneRingFan {
 public:
  // Throws kInvalidArgument for n < 3 or non-finite coordinates and
  // kDegenerateTriangle when a neighbor coincides with the center.
  OneRingFan(Point3 center, std::vector<Point3> neighbors);

  const Point3& center() const noexcept { return center_; }
  std::span<const Point3> neighbors() const noexcept { return neighbors_; }
  std::size_t valence() const noexcept { return neighbors_.size(); }
  const Point3& neighbor(std::ptrdiff_t i) const;

  // Applies x -> s * (x - center) + center to every neighbor.
  OneRingFan scaled(double s) const;

  friend bool operator==(const OneRingFan&, const OneRingFan&) = default;

 private:
  Point3 center_;
  std::vector<Point3> neighbors_;
};

// Per-fan scalars consumed by every curvature formula. Index i refers to
// triangle (p, p_i, p_{i+1}) for gamma/d/tri_area/sin/cos, and to spoke p_i
// for eta/alpha/delta/spokes:
//   gamma_i = angle p_i p p_{i+1}
//   alpha_i = angle p_i p_{i-1} p   (at p_{i-1}, opposite spoke i)
//   delta_i = angle p_i p_{i+1} p   (at p_{i+1}, opposite spoke i)
//   phi_i   = gamma_0 + ... + gamma_i
struct StarQuantities {
  std::size_t n = 0;
  std::vector<Point3> spokes;  // p_i - p
  std::vector<double> gamma;
  std::vector<double> sin_gamma;
  std::vector<double> cos_gamma;
  std::vector<double> eta;
  std::vector<double> d;
  std::vector<double> alpha;
  std::vector<double> delta;
  std::vector<double> cot_alpha;
  std::vector<double> cot_delta;
  std::vector<double> phi;
  std::vector<double> tri_area;
  double max_eta = 0.0;

  double gamma_sum() const { return phi.back(); }
  // Relative floor applied to every O(eta^2) denominator.
  double conditioning_floor() const { return 1e-14 * max_eta * max_eta; }
};

inline constexpr double kMinSinGamma = 1e-12;
inline constexpr double kMinRelativeArea = 1e-14;

// Throws kDegenerateTriangle when any triangle area falls below
// 1e-14 * max_eta^2 or any sin(gamma_i) < 1e-12.
StarQuantities star_quantities(const OneRingFan& fan);

// 2*pi minus the sum of apex angles; negative at saddle-like fans.
double angular_defect(const StarQuantities& q);

double fan_area(const StarQuantities& q);

// Weighted area sum_i [eta_i eta_{i+1} - cos(gamma_i)/2 (eta_i^2 +
// eta_{i+1}^2)] / (4 sin gamma_i).
double module_sp(const StarQuantities& q);

// 1/2 sum area_i - 1/8 sum cot(gamma_i) d_i^2. Equal to module_sp up to
// rounding, by the law of cosines.
double modified_denominator(const StarQuantities& q);

enum class VoronoiRule {
  // Signed circumcentric cell in every triangle; this is the Voronoi region
  // of p whenever the fan is locally Delaunay.
  kCircumcentric,
  // Circumcentric in non-obtuse triangles; area/2 when the obtuse angle is
  // at p, area/4 otherwise.
  kMixed,
};

double voronoi_area(const StarQuantities& q,
                    VoronoiRule rule = VoronoiRule::kCircumcentric);
double voronoi_area(const OneRingFan& fan,
                    VoronoiRule rule = VoronoiRule::kCircumcentric);

// Direction-weighted area built from the cumulative angles phi_i, with
// phi_{n+1} = phi_n + gamma_1 closing the last term.
double aniso_area(const StarQuantities& q);

}  // namespace angdef
