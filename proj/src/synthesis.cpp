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

#include "angdef/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "angdef/error.hpp"

namespace angdef {

TrueCurvatures true_curvatures(const QuadraticForm& a) {
  return {4.0 * a.a20 * a.a02 - a.a11 * a.a11, a.a20 + a.a02};
}

SurfaceMap::SurfaceMap(Eval eval, Jet jet, double fd_step)
    : eval_(std::move(eval)), jet_(std::move(jet)), fd_step_(fd_step) {
  if (!eval_) throw Error(ErrorCode::kInvalidArgument, "empty surface map");
  if (!(fd_step_ > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "finite-difference step must be > 0");
  }
}

SurfaceJet SurfaceMap::jet(Vec2 u) const {
  if (jet_) return jet_(u.u, u.v);
  const double h = fd_step_ * std::max({1.0, std::abs(u.u), std::abs(u.v)});
  const auto f = [&](double du, double dv) { return eval_(u.u + du, u.v + dv); };
  SurfaceJet j;
  j.f = f(0, 0);
  const Point3 up = f(h, 0), um = f(-h, 0), vp = f(0, h), vm = f(0, -h);
  j.fu = (up - um) * (0.5 / h);
  j.fv = (vp - vm) * (0.5 / h);
  j.fuu = (up - 2.0 * j.f + um) * (1.0 / (h * h));
  j.fvv = (vp - 2.0 * j.f + vm) * (1.0 / (h * h));
  j.fuv = (f(h, h) - f(h, -h) - f(-h, h) + f(-h, -h)) * (0.25 / (h * h));
  return j;
}

TrueCurvatures SurfaceMap::curvatures(Vec2 u) const {
  const SurfaceJet j = jet(u);
  const Point3 normal_raw = cross(j.fu, j.fv);
  const double len = norm(normal_raw);
  if (!(len > 1e-12 * norm(j.fu) * norm(j.fv))) {
    throw Error(ErrorCode::kDegenerateBasis, "surface is singular at base point");
  }
  const Point3 nrm = normal_raw * (1.0 / len);
  const double e = dot(j.fu, j.fu), f = dot(j.fu, j.fv), g = dot(j.fv, j.fv);
  const double l = dot(j.fuu, nrm), m = dot(j.fuv, nrm), n = dot(j.fvv, nrm);
  const double det1 = e * g - f * f;
  return {(l * n - m * m) / det1, (e * n - 2.0 * f * m + g * l) / (2.0 * det1)};
}

SurfaceMap SurfaceMap::plane() {
  return quadratic_graph(QuadraticForm{});
}

SurfaceMap SurfaceMap::quadratic_graph(QuadraticForm a) {
  return SurfaceMap(
      [a](double x, double y) { return Point3{x, y, a(x, y)}; },
      [a](double x, double y) {
        SurfaceJet j;
        j.f = {x, y, a(x, y)};
        j.fu = {1, 0, 2 * a.a20 * x + a.a11 * y};
        j.fv = {0, 1, a.a11 * x + 2 * a.a02 * y};
        j.fuu = {0, 0, 2 * a.a20};
        j.fuv = {0, 0, a.a11};
        j.fvv = {0, 0, 2 * a.a02};
        return j;
      });
}

SurfaceMap SurfaceMap::wave_graph() {
  return SurfaceMap(
      [](double x, double y) {
        return Point3{x, y, std::sin(x) * std::cos(y) + x * x * x / 3.0};
      },
      [](double x, double y) {
        const double sx = std::sin(x), cx = std::cos(x);
        const double sy = std::sin(y), cy = std::cos(y);
        SurfaceJet j;
        j.f = {x, y, sx * cy + x * x * x / 3.0};
        j.fu = {1, 0, cx * cy + x * x};
        j.fv = {0, 1, -sx * sy};
        j.fuu = {0, 0, -sx * cy + 2 * x};
        j.fuv = {0, 0, -cx * sy};
        j.fvv = {0, 0, -sx * cy};
        return j;
      });
}

SurfaceMap SurfaceMap::torus(double big_r, double r) {
  return SurfaceMap(
      [=](double u, double v) {
        const double w = big_r + r * std::cos(v);
        return Point3{w * std::cos(u), w * std::sin(u), r * std::sin(v)};
      },
      [=](double u, double v) {
        const double su = std::sin(u), cu = std::cos(u);
        const double sv = std::sin(v), cv = std::cos(v);
        const double w = big_r + r * cv;
        SurfaceJet j;
        j.f = {w * cu, w * su, r * sv};
        j.fu = {-w * su, w * cu, 0};
        j.fv = {-r * sv * cu, -r * sv * su, r * cv};
        j.fuu = {-w * cu, -w * su, 0};
        j.fuv = {r * sv * su, -r * sv * cu, 0};
        j.fvv = {-r * cv * cu, -r * cv * su, -r * sv};
        return j;
      });
}

std::vector<double> regular_fan_radii(const QuadraticForm& a, int n, double l1) {
  if (n < 3) {
    throw Error(ErrorCode::kInvalidArgument, "regular fan needs n >= 3");
  }
  if (!(l1 > 0.0) || !std::isfinite(l1)) {
    throw Error(ErrorCode::kInvalidArgument, "l1 must be positive and finite");
  }
  std::vector<double> l(static_cast<std::size_t>(n));
  l[0] = l1;
  const auto e_at = [&](int k) {
    const double theta = 2.0 * std::numbers::pi * k / n;
    return a(std::cos(theta), std::sin(theta));
  };
  double e_prev = e_at(0);
  for (int k = 1; k < n; ++k) {
    const double e = e_at(k);
    const double lp = l[k - 1];
    // Squared spoke length l^2 + l^4 e^2 is carried over from the previous
    // neighbor; solve e^2 x^2 + x - c = 0 for x = l_k^2 in the form that
    // stays finite as e -> 0.
    const double c = lp * lp + lp * lp * lp * lp * e_prev * e_prev;
    const double radicand = 1.0 + 4.0 * e * e * c;
    if (!(radicand > 0.0) || !std::isfinite(radicand)) {
      throw Error(ErrorCode::kInvalidRecurrence,
                  fmt::format("non-positive radicand at k={}", k + 1));
    }
    const double x = 2.0 * c / (1.0 + std::sqrt(radicand));
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw Error(ErrorCode::kInvalidRecurrence,
                  fmt::format("non-positive radius at k={}", k + 1));
    }
    l[k] = std::sqrt(x);
    e_prev = e;
  }
  return l;
}

OneRingFan regular_fan(const QuadraticForm& a, int n, double l1) {
  const auto l = regular_fan_radii(a, n, l1);
  std::vector<Point3> neighbors;
  neighbors.reserve(l.size());
  for (int k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / n;
    const double x = l[k] * std::cos(theta);
    const double y = l[k] * std::sin(theta);
    neighbors.push_back({x, y, a(x, y)});
  }
  return OneRingFan({0, 0, 0}, std::move(neighbors));
}

std::vector<Vec2> parallelogram_offsets(Vec2 b1, Vec2 b2) {
  return {b1, b2, b2 - b1, Vec2{} - b1, Vec2{} - b2, b1 - b2};
}

OneRingFan parallelogram_fan(const SurfaceMap& surface, Vec2 u, Vec2 b1,
                             Vec2 b2, double r) {
  const double det = b1.u * b2.v - b1.v * b2.u;
  const double scale = std::hypot(b1.u, b1.v) * std::hypot(b2.u, b2.v);
  if (!(std::abs(det) > 1e-12 * scale) || !(r > 0.0)) {
    throw Error(ErrorCode::kDegenerateBasis,
                "parallelogram basis must be independent and r > 0");
  }
  const SurfaceJet j = surface.jet(u);
  if (!(norm(cross(j.fu, j.fv)) > 1e-12 * norm(j.fu) * norm(j.fv))) {
    throw Error(ErrorCode::kDegenerateBasis, "surface is singular at base point");
  }
  std::vector<Point3> neighbors;
  for (const Vec2& o : parallelogram_offsets(b1, b2)) {
    neighbors.push_back(surface(u + r * o));
  }
  return OneRingFan(surface(u), std::move(neighbors));
}

CounterexampleFan counterexample_fan(double c, double r1) {
  if (!(r1 > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "r1 must be positive");
  }
  const double h = r1 * r1;
  OneRingFan fan({0, 0, 0}, {{r1, 0, h}, {0, r1, h}, {-r1, 0, h}, {0, -r1, h}});
  return {std::move(fan), 4.0 - c * c};
}

RegularityDefect regularity(const OneRingFan& fan, const Point3& normal) {
  const Point3 nrm = normal * (1.0 / norm(normal));
  const std::size_t n = fan.valence();
  RegularityDefect out;
  double eta_min = 0.0, eta_max = 0.0;
  double gamma_min = 0.0, gamma_max = 0.0;
  const double beta_target = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point3 a = fan.neighbors()[i] - fan.center();
    const Point3 b = fan.neighbors()[(i + 1) % n] - fan.center();
    const double eta = norm(a);
    const double gamma = angle_between(a, b);
    const double beta =
        angle_between(a - dot(a, nrm) * nrm, b - dot(b, nrm) * nrm);
    if (i == 0) {
      eta_min = eta_max = eta;
      gamma_min = gamma_max = gamma;
    }
    eta_min = std::min(eta_min, eta);
    eta_max = std::max(eta_max, eta);
    gamma_min = std::min(gamma_min, gamma);
    gamma_max = std::max(gamma_max, gamma);
    out.beta_error = std::max(out.beta_error, std::abs(beta - beta_target));
  }
  out.eta_spread = (eta_max - eta_min) / eta_max;
  out.gamma_spread = gamma_max - gamma_min;
  return out;
}

bool is_regular_tangent(const OneRingFan& fan, const Point3& normal, double tol) {
  const auto r = regularity(fan, normal);
  return r.eta_spread <= tol && r.beta_error <= tol;
}

bool is_regular_apex(const OneRingFan& fan, double tol) {
  const auto r = regularity(fan, Point3{0, 0, 1});
  return r.eta_spread <= tol && r.gamma_spread <= tol;
}

FanFamily regular_family(const QuadraticForm& a, int n) {
  const auto truth = true_curvatures(a);
  return {fmt::format("regular n={} a=({},{},{})", n, a.a20, a.a11, a.a02),
          [a, n](double l1) { return regular_fan(a, n, l1); }, truth.gaussian,
          truth.mean};
}

FanFamily parallelogram_family(SurfaceMap surface, Vec2 u, Vec2 b1, Vec2 b2) {
  const auto truth = surface.curvatures(u);
  return {fmt::format("parallelogram u=({},{})", u.u, u.v),
          [surface = std::move(surface), u, b1, b2](double r) {
            return parallelogram_fan(surface, u, b1, b2, r);
          },
          truth.gaussian, std::abs(truth.mean)};
}

FanFamily counterexample_family(double c) {
  return {fmt::format("counterexample c={}", c),
          [c](double r1) { return counterexample_fan(c, r1).fan; }, 4.0 - c * c,
          2.0};
}

std::vector<RefinedFan> refine(const FanFamily& family,
                               std::span<const double> levels) {
  if (levels.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "refine needs at least one level");
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (!(levels[i] > 0.0) || (i > 0 && !(levels[i] < levels[i - 1]))) {
      throw Error(ErrorCode::kInvalidArgument,
                  "levels must be positive and strictly decreasing");
    }
  }
  std::vector<RefinedFan> out;
  out.reserve(levels.size());
  for (double r : levels) out.push_back({r, family.generate(r)});
  return out;
}

}  // namespace angdef
