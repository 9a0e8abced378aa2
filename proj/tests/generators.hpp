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

// Hand-rolled random generators for property tests. Every generator draws
// from a caller-owned mt19937_64 so failures reproduce from the seed alone.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "angdef/geometry.hpp"
#include "angdef/synthesis.hpp"
#include "oracle.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Star-shaped fan around the origin: sorted polar angles with a minimum gap
// (so no apex angle reaches pi), radii in [0.2, 2] and heights up to 0.6 of
// the radius. The result is always a valid, non-degenerate fan.
inline angdef::OneRingFan random_fan(Rng& rng, int n_min = 3, int n_max = 12) {
  const int n = uniform_int(rng, n_min, n_max);
  const double two_pi = 2 * std::numbers::pi;
  const double min_gap = 0.15 * two_pi / n;
  std::vector<double> gaps(n);
  double total = 0;
  for (auto& g : gaps) {
    g = uniform(rng, 0.2, 1.0);
    total += g;
  }
  const double slack = two_pi - n * min_gap;
  double theta = uniform(rng, 0.0, two_pi);
  std::vector<angdef::Point3> nbrs;
  for (int k = 0; k < n; ++k) {
    const double r = uniform(rng, 0.2, 2.0);
    nbrs.push_back({r * std::cos(theta), r * std::sin(theta), r * uniform(rng, -0.6, 0.6)});
    theta += min_gap + slack * gaps[k] / total;
  }
  return angdef::OneRingFan({0, 0, 0}, std::move(nbrs));
}

// Planar fan in the z = 0 plane. Jitter is bounded so every gap stays
// below pi and the apex angles sum to 2 pi.
inline angdef::OneRingFan random_flat_fan(Rng& rng) {
  const int n = uniform_int(rng, 3, 12);
  const double two_pi = 2 * std::numbers::pi;
  std::vector<double> t(n);
  for (int k = 0; k < n; ++k) t[k] = two_pi * (k + uniform(rng, 0.3, 0.7)) / n;
  std::vector<angdef::Point3> nbrs;
  for (double a : t) {
    const double r = uniform(rng, 0.3, 2.0);
    nbrs.push_back({r * std::cos(a), r * std::sin(a), 0.0});
  }
  return angdef::OneRingFan({0, 0, 0}, std::move(nbrs));
}

struct RigidMotion {
  double r[3][3];
  angdef::Point3 t;

  angdef::Point3 operator()(const angdef::Point3& p) const {
    return {r[0][0] * p.x + r[0][1] * p.y + r[0][2] * p.z + t.x,
            r[1][0] * p.x + r[1][1] * p.y + r[1][2] * p.z + t.y,
            r[2][0] * p.x + r[2][1] * p.y + r[2][2] * p.z + t.z};
  }
};

// Rotation from a random unit quaternion plus a translation in [-5, 5]^3.
inline RigidMotion random_motion(Rng& rng) {
  std::normal_distribution<double> nd;
  double w = nd(rng), x = nd(rng), y = nd(rng), z = nd(rng);
  const double s = 1.0 / std::sqrt(w * w + x * x + y * y + z * z);
  w *= s, x *= s, y *= s, z *= s;
  RigidMotion m{{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
                 {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
                 {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}},
                {uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5)}};
  return m;
}

inline angdef::OneRingFan apply(const RigidMotion& m, const angdef::OneRingFan& f) {
  std::vector<angdef::Point3> nbrs;
  for (const auto& q : f.neighbors()) nbrs.push_back(m(q));
  return angdef::OneRingFan(m(f.center()), std::move(nbrs));
}

inline angdef::QuadraticForm random_form(Rng& rng, double range = 1.0) {
  return {uniform(rng, -range, range), uniform(rng, -range, range),
          uniform(rng, -range, range)};
}

inline oracle::V3 to_v3(const angdef::Point3& p) { return {p.x, p.y, p.z}; }

inline oracle::Fan to_oracle(const angdef::OneRingFan& f) {
  oracle::Fan out{to_v3(f.center()), {}};
  for (const auto& q : f.neighbors()) out.q.push_back(to_v3(q));
  return out;
}

inline angdef::OneRingFan from_oracle(const oracle::Fan& f) {
  std::vector<angdef::Point3> nbrs;
  for (const auto& q : f.q) nbrs.push_back({q[0], q[1], q[2]});
  return angdef::OneRingFan({f.p[0], f.p[1], f.p[2]}, std::move(nbrs));
}

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace gen
