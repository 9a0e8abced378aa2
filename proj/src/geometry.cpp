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

#include "angdef/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "angdef/error.hpp"

namespace angdef {

OneRingFan::OneRingFan(Point3 center, std::vector<Point3> neighbors)
    : center_(center), neighbors_(std::move(neighbors)) {
  if (neighbors_.size() < 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "one-ring fan needs at least 3 neighbors, got " +
                    std::to_string(neighbors_.size()));
  }
  if (!is_finite(center_)) {
    throw Error(ErrorCode::kInvalidArgument, "non-finite fan center");
  }
  for (std::size_t i = 0; i < neighbors_.size(); ++i) {
    if (!is_finite(neighbors_[i])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "non-finite neighbor " + std::to_string(i));
    }
    if (neighbors_[i] == center_) {
      throw Error(ErrorCode::kDegenerateTriangle,
                  "neighbor " + std::to_string(i) + " coincides with center");
    }
  }
}

const Point3& OneRingFan::neighbor(std::ptrdiff_t i) const {
  const auto n = static_cast<std::ptrdiff_t>(neighbors_.size());
  return neighbors_[static_cast<std::size_t>(((i % n) + n) % n)];
}

OneRingFan OneRingFan::scaled(double s) const {
  std::vector<Point3> out;
  out.reserve(neighbors_.size());
  for (const auto& p : neighbors_) out.push_back(center_ + s * (p - center_));
  return OneRingFan(center_, std::move(out));
}

StarQuantities star_quantities(const OneRingFan& fan) {
  const std::size_t n = fan.valence();
  StarQuantities q;
  q.n = n;
  q.spokes.resize(n);
  q.eta.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    q.spokes[i] = fan.neighbors()[i] - fan.center();
    q.eta[i] = norm(q.spokes[i]);
  }
  q.max_eta = *std::max_element(q.eta.begin(), q.eta.end());
  const double area_floor = kMinRelativeArea * q.max_eta * q.max_eta;

  q.gamma.resize(n);
  q.sin_gamma.resize(n);
  q.cos_gamma.resize(n);
  q.d.resize(n);
  q.tri_area.resize(n);
  q.phi.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const Point3& a = q.spokes[i];
    const Point3& b = q.spokes[j];
    const double cross_norm = norm(cross(a, b));
    const double inner = dot(a, b);
    const double scale = q.eta[i] * q.eta[j];
    q.tri_area[i] = 0.5 * cross_norm;
    q.sin_gamma[i] = cross_norm / scale;
    q.cos_gamma[i] = inner / scale;
    if (q.tri_area[i] < area_floor || q.sin_gamma[i] < kMinSinGamma) {
      throw Error(ErrorCode::kDegenerateTriangle,
                  "degenerate fan triangle " + std::to_string(i));
    }
    q.gamma[i] = std::atan2(cross_norm, inner);
    q.d[i] = distance(fan.neighbors()[i], fan.neighbors()[j]);
    q.phi[i] = (i == 0 ? 0.0 : q.phi[i - 1]) + q.gamma[i];
  }

  q.alpha.resize(n);
  q.delta.resize(n);
  q.cot_alpha.resize(n);
  q.cot_delta.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point3& p = fan.center();
    const Point3& pi = fan.neighbors()[i];
    const Point3& prev = fan.neighbors()[(i + n - 1) % n];
    const Point3& next = fan.neighbors()[(i + 1) % n];
    {
      const Point3 u = pi - prev;
      const Point3 v = p - prev;
      const double c = norm(cross(u, v));
      q.alpha[i] = std::atan2(c, dot(u, v));
      q.cot_alpha[i] = dot(u, v) / c;
    }
    {
      const Point3 u = pi - next;
      const Point3 v = p - next;
      const double c = norm(cross(u, v));
      q.delta[i] = std::atan2(c, dot(u, v));
      q.cot_delta[i] = dot(u, v) / c;
    }
  }
  return q;
}

double angular_defect(const StarQuantities& q) {
  return 2.0 * std::numbers::pi - q.gamma_sum();
}

double fan_area(const StarQuantities& q) {
  double sum = 0.0;
  for (double a : q.tri_area) sum += a;
  return sum;
}

double module_sp(const StarQuantities& q) {
  double sum = 0.0;
  for (std::size_t i = 0; i < q.n; ++i) {
    const std::size_t j = (i + 1) % q.n;
    const double ei = q.eta[i];
    const double ej = q.eta[j];
    sum += (ei * ej - 0.5 * q.cos_gamma[i] * (ei * ei + ej * ej)) /
           (4.0 * q.sin_gamma[i]);
  }
  return sum;
}

double modified_denominator(const StarQuantities& q) {
  double area = 0.0;
  double cot_term = 0.0;
  for (std::size_t i = 0; i < q.n; ++i) {
    area += q.tri_area[i];
    cot_term += (q.cos_gamma[i] / q.sin_gamma[i]) * q.d[i] * q.d[i];
  }
  return 0.5 * area - 0.125 * cot_term;
}

double voronoi_area(const StarQuantities& q, VoronoiRule rule) {
  constexpr double kHalfPi = 0.5 * std::numbers::pi;
  double sum = 0.0;
  for (std::size_t i = 0; i < q.n; ++i) {
    const std::size_t j = (i + 1) % q.n;
    // Triangle (p, p_i, p_j): angle at p_j is delta_i, angle at p_i is
    // alpha_j; each cotangent weights the squared spoke opposite to it.
    const double circumcentric = 0.125 * (q.eta[i] * q.eta[i] * q.cot_delta[i] +
                                          q.eta[j] * q.eta[j] * q.cot_alpha[j]);
    if (rule == VoronoiRule::kCircumcentric) {
      sum += circumcentric;
      continue;
    }
    if (q.gamma[i] > kHalfPi) {
      sum += 0.5 * q.tri_area[i];
    } else if (q.delta[i] > kHalfPi || q.alpha[j] > kHalfPi) {
      sum += 0.25 * q.tri_area[i];
    } else {
      sum += circumcentric;
    }
  }
  return sum;
}

double voronoi_area(const OneRingFan& fan, VoronoiRule rule) {
  return voronoi_area(star_quantities(fan), rule);
}

double aniso_area(const StarQuantities& q) {
  double sum = 0.0;
  for (std::size_t i = 0; i < q.n; ++i) {
    const std::size_t j = (i + 1) % q.n;
    const double phi_i = q.phi[i];
    const double phi_j = (i + 1 < q.n) ? q.phi[i + 1] : q.phi[i] + q.gamma[0];
    const double si = std::sin(phi_i);
    const double sj = std::sin(phi_j);
    const double ei = q.eta[i];
    const double ej = q.eta[j];
    const double first =
        0.5 * ei * ej * (1.0 - std::cos(2.0 * phi_i) * std::cos(2.0 * phi_j));
    const double second =
        0.25 * q.cos_gamma[i] * (ei * ei * si * si + ej * ej * sj * sj);
    sum += (first - second) / (4.0 * q.sin_gamma[i]);
  }
  return sum;
}

}  // namespace angdef
