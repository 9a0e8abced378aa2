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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "angdef/geometry.hpp"

namespace angdef {

using Triangle = std::array<std::uint32_t, 3>;
using Edge = std::pair<std::uint32_t, std::uint32_t>;  // first < second

// Indexed triangle soup. Immutable after construction; the per-vertex
// incidence lists are derived once in the constructor.
class TriangleMesh {
 public:
  TriangleMesh() = default;
  // Throws kInvalidArgument for out-of-range indices, triangles with a
  // repeated index or non-finite coordinates.
  TriangleMesh(std::vector<Point3> vertices, std::vector<Triangle> triangles);

  std::span<const Point3> vertices() const noexcept { return vertices_; }
  std::span<const Triangle> triangles() const noexcept { return triangles_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t triangle_count() const noexcept { return triangles_.size(); }

  // Triangle indices incident to vertex v, ascending.
  std::span<const std::uint32_t> incident_triangles(std::uint32_t v) const;

  // Unique undirected edges, sorted.
  std::vector<Edge> edges() const;

  // True when every directed edge occurs once and every undirected edge has
  // exactly two incident triangles.
  bool is_closed_and_oriented() const;

  long euler_characteristic() const;

  friend bool operator==(const TriangleMesh& a, const TriangleMesh& b) {
    return a.vertices_ == b.vertices_ && a.triangles_ == b.triangles_;
  }

 private:
  std::vector<Point3> vertices_;
  std::vector<Triangle> triangles_;
  std::vector<std::uint32_t> incidence_offsets_;
  std::vector<std::uint32_t> incidence_;
};

// Neighbors of v ordered to follow triangle winding, starting from the
// second corner of the lowest-indexed incident triangle.
// Throws kBoundaryVertex when the fan does not close and kNonManifoldVertex
// when an edge at v is shared by more than two triangles, winding is
// inconsistent, or v has several fans.
OneRingFan build_one_ring(const TriangleMesh& mesh, std::uint32_t v);

// Neighbor vertex indices in the same order build_one_ring uses.
std::vector<std::uint32_t> one_ring_indices(const TriangleMesh& mesh,
                                            std::uint32_t v);

// Unit-edge reference solids, used by tests and fixtures.
TriangleMesh make_octahedron(double edge = 1.0);
TriangleMesh make_icosahedron(double edge = 1.0);

}  // namespace angdef
