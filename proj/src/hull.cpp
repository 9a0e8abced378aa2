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

#include "angdef/hull.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <unordered_map>

#include "angdef/error.hpp"

namespace angdef {
namespace {

constexpr double kMinSeparation = 1e-9;

// Orientation of d relative to the plane through a, b, c: positive when d
// lies on the side the normal (b - a) x (c - a) points to. Results inside
// the floating-point error bound, or within kCoplanarEpsilon, report 0.
int orient(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  const Point3 ad = a - d, bd = b - d, cd = c - d;
  const double det = ad.x * (bd.y * cd.z - bd.z * cd.y) +
                     bd.x * (cd.y * ad.z - cd.z * ad.y) +
                     cd.x * (ad.y * bd.z - ad.z * bd.y);
  const double permanent =
      std::abs(ad.x) * (std::abs(bd.y * cd.z) + std::abs(bd.z * cd.y)) +
      std::abs(bd.x) * (std::abs(cd.y * ad.z) + std::abs(cd.z * ad.y)) +
      std::abs(cd.x) * (std::abs(ad.y * bd.z) + std::abs(ad.z * bd.y));
  constexpr double kErrBound = 7.771561172376103e-16;
  const double threshold = std::max(kErrBound * permanent, kCoplanarEpsilon);
  if (det > threshold) return -1;
  if (det < -threshold) return 1;
  return 0;
}

struct Face {
  std::array<std::uint32_t, 3> v;
  std::vector<std::uint32_t> conflicts;
  bool alive = true;
};

class HullBuilder {
 public:
  explicit HullBuilder(std::span<const Point3> pts) : pts_(pts) {}

  TriangleMesh build() {
    const auto seed = initial_simplex();
    std::vector<bool> in_simplex(pts_.size(), false);
    for (auto i : seed) in_simplex[i] = true;

    conflict_face_.assign(pts_.size(), -1);
    for (std::uint32_t i = 0; i < pts_.size(); ++i) {
      if (in_simplex[i]) continue;
      for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
        if (sees(f, i)) {
          assign(i, f);
          break;
        }
      }
    }
    for (std::uint32_t i = 0; i < pts_.size(); ++i) {
      if (conflict_face_[i] >= 0) insert(i);
    }

    std::vector<Triangle> tris;
    for (const auto& f : faces_) {
      if (f.alive) tris.push_back({f.v[0], f.v[1], f.v[2]});
    }
    return TriangleMesh(std::vector<Point3>(pts_.begin(), pts_.end()),
                        std::move(tris));
  }

 private:
  static std::uint64_t key(std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }

  bool sees(int f, std::uint32_t p) const {
    const auto& v = faces_[f].v;
    return orient(pts_[v[0]], pts_[v[1]], pts_[v[2]], pts_[p]) > 0;
  }

  void assign(std::uint32_t p, int f) {
    conflict_face_[p] = f;
    faces_[f].conflicts.push_back(p);
  }

  int add_face(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    const int id = static_cast<int>(faces_.size());
    faces_.push_back({{a, b, c}, {}, true});
    edge_owner_[key(a, b)] = id;
    edge_owner_[key(b, c)] = id;
    edge_owner_[key(c, a)] = id;
    return id;
  }

  void kill_face(int f) {
    auto& face = faces_[f];
    face.alive = false;
    for (int k = 0; k < 3; ++k) {
      auto it = edge_owner_.find(key(face.v[k], face.v[(k + 1) % 3]));
      if (it != edge_owner_.end() && it->second == f) edge_owner_.erase(it);
    }
  }

  std::array<std::uint32_t, 4> initial_simplex() {
    const auto n = static_cast<std::uint32_t>(pts_.size());
    if (n < 4) {
      throw Error(ErrorCode::kDegenerateInput, "hull needs at least 4 points");
    }
    std::uint32_t i1 = 1;
    while (i1 < n && distance(pts_[0], pts_[i1]) <= kMinSeparation) ++i1;
    std::uint32_t i2 = i1 + 1;
    while (i2 < n && norm(cross(pts_[i1] - pts_[0], pts_[i2] - pts_[0])) <=
                         kCoplanarEpsilon) {
      ++i2;
    }
    std::uint32_t i3 = i2 + 1;
    while (i3 < n && orient(pts_[0], pts_[i1], pts_[i2], pts_[i3]) == 0) ++i3;
    if (i3 >= n) {
      throw Error(ErrorCode::kDegenerateInput, "points are coplanar");
    }
    std::uint32_t a = 0, b = i1, c = i2, d = i3;
    if (orient(pts_[a], pts_[b], pts_[c], pts_[d]) > 0) std::swap(b, c);
    // d now lies behind (a, b, c).
    add_face(a, b, c);
    add_face(a, d, b);
    add_face(b, d, c);
    add_face(c, d, a);
    return {a, b, c, d};
  }

  void insert(std::uint32_t p) {
    const int start = conflict_face_[p];
    std::vector<int> visible{start};
    std::vector<char> is_visible(faces_.size(), 0);
    is_visible[start] = 1;
    for (std::size_t k = 0; k < visible.size(); ++k) {
      const auto v = faces_[visible[k]].v;
      for (int e = 0; e < 3; ++e) {
        const int nb = edge_owner_.at(key(v[(e + 1) % 3], v[e]));
        if (!is_visible[nb] && sees(nb, p)) {
          is_visible[nb] = 1;
          visible.push_back(nb);
        }
      }
    }

    std::vector<std::pair<std::uint32_t, std::uint32_t>> horizon;
    std::vector<std::uint32_t> orphans;
    for (int f : visible) {
      const auto v = faces_[f].v;
      for (int e = 0; e < 3; ++e) {
        const int nb = edge_owner_.at(key(v[(e + 1) % 3], v[e]));
        if (!is_visible[nb]) horizon.emplace_back(v[e], v[(e + 1) % 3]);
      }
      for (auto q : faces_[f].conflicts) {
        if (q != p && conflict_face_[q] == f) orphans.push_back(q);
      }
      faces_[f].conflicts.clear();
      faces_[f].conflicts.shrink_to_fit();
    }
    for (int f : visible) kill_face(f);
    conflict_face_[p] = -1;

    std::vector<int> created;
    created.reserve(horizon.size());
    for (const auto& [a, b] : horizon) created.push_back(add_face(a, b, p));

    std::sort(orphans.begin(), orphans.end());
    for (auto q : orphans) {
      conflict_face_[q] = -1;
      for (int f : created) {
        if (sees(f, q)) {
          assign(q, f);
          break;
        }
      }
      if (conflict_face_[q] >= 0) continue;
      // q may still see an older face that survived this insertion.
      for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
        if (faces_[f].alive && sees(f, q)) {
          assign(q, f);
          break;
        }
      }
    }
  }

  std::span<const Point3> pts_;
  std::vector<Face> faces_;
  std::vector<int> conflict_face_;
  std::unordered_map<std::uint64_t, int> edge_owner_;
};

struct CellHash {
  std::size_t operator()(const std::array<long long, 3>& c) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : c) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};

}  // namespace

SpherePointSet sample_uniform_sphere(std::size_t n, std::uint64_t seed) {
  if (n < 4) {
    throw Error(ErrorCode::kInvalidArgument, "sphere sample needs n >= 4");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  constexpr double kCell = 1e-6;
  std::unordered_map<std::array<long long, 3>, std::vector<std::uint32_t>,
                     CellHash>
      grid;
  const auto cell_of = [](const Point3& p) {
    return std::array<long long, 3>{std::llround(std::floor(p.x / kCell)),
                                    std::llround(std::floor(p.y / kCell)),
                                    std::llround(std::floor(p.z / kCell))};
  };

  SpherePointSet out;
  out.seed = seed;
  out.points.reserve(n);
  while (out.points.size() < n) {
    Point3 p{normal(rng), normal(rng), normal(rng)};
    const double len = norm(p);
    if (!(len > 1e-12)) continue;
    p *= 1.0 / len;
    const auto c = cell_of(p);
    bool clash = false;
    for (long long dx = -1; dx <= 1 && !clash; ++dx) {
      for (long long dy = -1; dy <= 1 && !clash; ++dy) {
        for (long long dz = -1; dz <= 1 && !clash; ++dz) {
          auto it = grid.find({c[0] + dx, c[1] + dy, c[2] + dz});
          if (it == grid.end()) continue;
          for (auto idx : it->second) {
            if (distance(out.points[idx], p) < kMinSeparation) {
              clash = true;
              break;
            }
          }
        }
      }
    }
    if (clash) continue;
    grid[c].push_back(static_cast<std::uint32_t>(out.points.size()));
    out.points.push_back(p);
  }
  return out;
}

TriangleMesh convex_hull(std::span<const Point3> points) {
  for (const auto& p : points) {
    if (!is_finite(p)) {
      throw Error(ErrorCode::kDegenerateInput, "non-finite hull input");
    }
  }
  return HullBuilder(points).build();
}

TriangleMesh convex_hull(const SpherePointSet& set) {
  return convex_hull(std::span<const Point3>(set.points));
}

double average_edge_length(const TriangleMesh& mesh) {
  const auto edges = mesh.edges();
  if (edges.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "mesh has no edges");
  }
  double sum = 0.0;
  for (const auto& [a, b] : edges) {
    sum += distance(mesh.vertices()[a], mesh.vertices()[b]);
  }
  return sum / static_cast<double>(edges.size());
}

}  // namespace angdef
