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
#include <span>
#include <vector>

#include "angdef/geometry.hpp"
#include "angdef/mesh.hpp"

namespace angdef {

struct SpherePointSet {
  std::vector<Point3> points;
  std::uint64_t seed = 0;
};

// n points i.i.d. uniform on the unit sphere, drawn as normalized triples of
// standard normals from a mt19937_64 stream seeded with `seed`. Samples
// closer than 1e-9 to an earlier point are redrawn from the same stream.
SpherePointSet sample_uniform_sphere(std::size_t n, std::uint64_t seed);

// Orientation determinant below which four points count as coplanar.
inline constexpr double kCoplanarEpsilon = 1e-12;

// Closed, outward-oriented triangulated convex hull. Vertex indices are the
// input indices; points strictly inside the hull end up unreferenced.
// Throws kDegenerateInput when fewer than four points or all points are
// coplanar.
TriangleMesh convex_hull(std::span<const Point3> points);
TriangleMesh convex_hull(const SpherePointSet& set);

// Arithmetic mean over unique undirected edges.
double average_edge_length(const TriangleMesh& mesh);

}  // namespace angdef
