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

#include "angdef/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <string>

#include "angdef/error.hpp"

namespace angdef {

TriangleMesh::TriangleMesh(std::vector<Point3> vertices,
                           std::vector<Triangle> triangles)
    : vertices_(std::move(vertices)), triangles_(std::move(triangles)) {
  const auto nv = vertices_.size();
  for (std::size_t v = 0; v < nv; ++v) {
    if (!is_finite(vertices_[v])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vertex " + std::to_string(v) + " has non-finite coordinates");
    }
  }
  std::vector<std::uint32_t> counts(nv + 1, 0);
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const auto& tri = triangles_[t];
    for (auto idx : tri) {
      if (idx >= nv) {
        throw Error(ErrorCode::kInvalidArgument,
                    "triangle " + std::to_string(t) + " references vertex " +
                        std::to_string(idx) + " of " + std::to_string(nv));
      }
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "triangle " + std::to_string(t) + " repeats a vertex");
    }
    for (auto idx : tri) ++counts[idx + 1];
  }
  for (std::size_t v = 0; v < nv; ++v) counts[v + 1] += counts[v];
  incidence_offsets_ = counts;
  incidence_.resize(counts[nv]);
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    for (auto idx : triangles_[t]) {
      incidence_[counts[idx]++] = static_cast<std::uint32_t>(t);
    }
  }
}

std::span<const std::uint32_t> TriangleMesh::incident_triangles(
    std::uint32_t v) const {
  if (v >= vertices_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex index " + std::to_string(v) + " out of range");
  }
  const auto begin = incidence_offsets_[v];
  const auto end = incidence_offsets_[v + 1];
  return std::span<const std::uint32_t>(incidence_).subspan(begin, end - begin);
}

std::vector<Edge> TriangleMesh::edges() const {
  std::vector<Edge> out;
  out.reserve(triangles_.size() * 3);
  for (const auto& tri : triangles_) {
    for (int k = 0; k < 3; ++k) {
      auto a = tri[k];
      auto b = tri[(k + 1) % 3];
      out.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool TriangleMesh::is_closed_and_oriented() const {
  std::set<std::pair<std::uint32_t, std::uint32_t>> directed;
  for (const auto& tri : triangles_) {
    for (int k = 0; k < 3; ++k) {
      if (!directed.emplace(tri[k], tri[(k + 1) % 3]).second) return false;
    }
  }
  for (const auto& [a, b] : directed) {
    if (!directed.contains({b, a})) return false;
  }
  return true;
}

long TriangleMesh::euler_characteristic() const {
  return static_cast<long>(vertices_.size()) -
         static_cast<long>(edges().size()) +
         static_cast<long>(triangles_.size());
}

std::vector<std::uint32_t> one_ring_indices(const TriangleMesh& mesh,
                                            std::uint32_t v) {
  const auto incident = mesh.incident_triangles(v);
  if (incident.empty()) {
    throw Error(ErrorCode::kBoundaryVertex,
                "vertex " + std::to_string(v) + " is isolated");
  }
  // For each incident triangle rotated to (v, a, b), record a -> b.
  std::map<std::uint32_t, std::uint32_t> next;
  std::set<std::uint32_t> targets;
  std::uint32_t start = 0;
  for (std::size_t k = 0; k < incident.size(); ++k) {
    const auto& tri = mesh.triangles()[incident[k]];
    int c = 0;
    while (tri[c] != v) ++c;
    const auto a = tri[(c + 1) % 3];
    const auto b = tri[(c + 2) % 3];
    if (k == 0) start = a;
    if (!next.emplace(a, b).second || !targets.insert(b).second) {
      throw Error(ErrorCode::kNonManifoldVertex,
                  "vertex " + std::to_string(v) +
                      " has an edge with more than two triangles or "
                      "inconsistent winding");
    }
  }
  std::vector<std::uint32_t> ring;
  ring.reserve(next.size());
  auto cur = start;
  do {
    ring.push_back(cur);
    auto it = next.find(cur);
    if (it == next.end()) {
      throw Error(ErrorCode::kBoundaryVertex,
                  "fan around vertex " + std::to_string(v) + " does not close");
    }
    cur = it->second;
  } while (cur != start && ring.size() <= next.size());
  if (cur != start) {
    // The walk left the cycle through start: start lies on an open chain.
    throw Error(ErrorCode::kBoundaryVertex,
                "fan around vertex " + std::to_string(v) + " does not close");
  }
  if (ring.size() != next.size()) {
    throw Error(ErrorCode::kNonManifoldVertex,
                "vertex " + std::to_string(v) + " has more than one fan");
  }
  return ring;
}

OneRingFan build_one_ring(const TriangleMesh& mesh, std::uint32_t v) {
  const auto ring = one_ring_indices(mesh, v);
  std::vector<Point3> neighbors;
  neighbors.reserve(ring.size());
  for (auto idx : ring) neighbors.push_back(mesh.vertices()[idx]);
  return OneRingFan(mesh.vertices()[v], std::move(neighbors));
}

TriangleMesh make_octahedron(double edge) {
  const double r = edge / std::numbers::sqrt2;
  std::vector<Point3> v = {{r, 0, 0},  {-r, 0, 0}, {0, r, 0},
                           {0, -r, 0}, {0, 0, r},  {0, 0, -r}};
  std::vector<Triangle> t = {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
                             {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
  return TriangleMesh(std::move(v), std::move(t));
}

TriangleMesh make_icosahedron(double edge) {
  const double phi = std::numbers::phi;
  const double s = edge / 2.0;
  std::vector<Point3> v = {
      {-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1}};
  for (auto& p : v) p *= s;
  std::vector<Triangle> t = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10},
                             {0, 10, 11}, {1, 5, 9},  {5, 11, 4},  {11, 10, 2},
                             {10, 7, 6},  {7, 1, 8},  {3, 9, 4},   {3, 4, 2},
                             {3, 2, 6},   {3, 6, 8},  {3, 8, 9},   {4, 9, 5},
                             {2, 4, 11},  {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};
  return TriangleMesh(std::move(v), std::move(t));
}

}  // namespace angdef
