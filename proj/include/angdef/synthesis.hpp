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

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "angdef/geometry.hpp"

namespace angdef {

// f(x, y) = a20 x^2 + a11 x y + a02 y^2.
struct QuadraticForm {
  double a20 = 0.0;
  double a11 = 0.0;
  double a02 = 0.0;

  constexpr double operator()(double x, double y) const {
    return a20 * x * x + a11 * x * y + a02 * y * y;
  }
};

struct TrueCurvatures {
  double gaussian = 0.0;
  double mean = 0.0;
};

// Curvatures of the graph of `a` at the origin, where the gradient vanishes:
// G = 4 a20 a02 - a11^2, H = a20 + a02.
TrueCurvatures true_curvatures(const QuadraticForm& a);

struct Vec2 {
  double u = 0.0;
  double v = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.u + b.u, a.v + b.v}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.u - b.u, a.v - b.v}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.u, s * a.v}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

// Value and partial derivatives up to second order at one parameter point.
struct SurfaceJet {
  Point3 f, fu, fv, fuu, fuv, fvv;
};

// Smooth parametric surface F(u, v). Derivatives come from the analytic jet
// when one is supplied and from central differences otherwise.
class SurfaceMap {
 public:
  using Eval = std::function<Point3(double, double)>;
  using Jet = std::function<SurfaceJet(double, double)>;

  explicit SurfaceMap(Eval eval, Jet jet = {}, double fd_step = 1e-4);

  Point3 operator()(Vec2 u) const { return eval_(u.u, u.v); }
  SurfaceJet jet(Vec2 u) const;
  bool has_analytic_jet() const noexcept { return static_cast<bool>(jet_); }

  // Throws kDegenerateBasis when the partials are (numerically) parallel.
  TrueCurvatures curvatures(Vec2 u) const;

  static SurfaceMap plane();
  static SurfaceMap quadratic_graph(QuadraticForm a);
  // Graph of sin(x) cos(y) + x^3 / 3.
  static SurfaceMap wave_graph();
  // Torus with tube radius r around a circle of radius big_r.
  static SurfaceMap torus(double big_r, double r);

 private:
  Eval eval_;
  Jet jet_;
  double fd_step_;
};

// Throws kInvalidRecurrence if the edge-length recurrence breaks down
// (non-positive or non-finite radius).
OneRingFan regular_fan(const QuadraticForm& a, int n, double l1);

// The projected radii l_k used by regular_fan.
std::vector<double> regular_fan_radii(const QuadraticForm& a, int n, double l1);

// Valence-6 fan over u + r * o_j with offsets b1, b2, b2 - b1, -b1, -b2,
// b1 - b2. Throws kDegenerateBasis for parallel offsets, r <= 0 or a
// singular parametrization at u.
OneRingFan parallelogram_fan(const SurfaceMap& surface, Vec2 u, Vec2 b1,
                             Vec2 b2, double r);

// The six parameter offsets used by parallelogram_fan, before scaling by r.
std::vector<Vec2> parallelogram_offsets(Vec2 b1, Vec2 b2);

struct CounterexampleFan {
  OneRingFan fan;
  double true_gaussian;
};

// Valence-4 fan over the axis points of radius r1 on the graph of
// x^2 + c x y + y^2. The coordinates do not depend on c.
CounterexampleFan counterexample_fan(double c, double r1);

// Spreads of a fan's regularity measures about a unit normal at the center:
//   eta_spread    = (max eta - min eta) / max eta
//   beta_error    = max |projected angle - 2 pi / n|
//   gamma_spread  = max gamma - min gamma
struct RegularityDefect {
  double eta_spread = 0.0;
  double beta_error = 0.0;
  double gamma_spread = 0.0;
};

RegularityDefect regularity(const OneRingFan& fan, const Point3& normal);

// Regular vertex in the tangent-plane sense: equal spokes and projected
// angles 2 pi / n.
bool is_regular_tangent(const OneRingFan& fan, const Point3& normal,
                        double tol = 1e-12);
// Alternative: equal spokes and equal apex angles.
bool is_regular_apex(const OneRingFan& fan, double tol = 1e-12);

// A one-parameter fan generator with curvature targets that do not depend
// on the refinement level.
struct FanFamily {
  std::string label;
  std::function<OneRingFan(double)> generate;
  double true_gaussian = 0.0;
  double true_mean = 0.0;
};

FanFamily regular_family(const QuadraticForm& a, int n);
FanFamily parallelogram_family(SurfaceMap surface, Vec2 u, Vec2 b1, Vec2 b2);
FanFamily counterexample_family(double c);

struct RefinedFan {
  double level;
  OneRingFan fan;
};

// Throws kInvalidArgument unless levels are positive and strictly
// decreasing.
std::vector<RefinedFan> refine(const FanFamily& family,
                               std::span<const double> levels);

}  // namespace angdef
