// Copyright 2026 The icmesh Authors.
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

#include "icmesh/surface_mesh.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "icmesh/error.hpp"

namespace icmesh {
namespace {

struct DirectedEdge {
  std::uint64_t key;  // (min << 32) | max
  int sign;           // +1 when traversed min -> max
};

EdgeCensus census_of(const std::vector<Triangle>& triangles) {
  std::vector<DirectedEdge> edges;
  edges.reserve(triangles.size() * 3);
  for (const Triangle& tri : triangles) {
    for (int k = 0; k < 3; ++k) {
      const Index a = tri[k];
      const Index b = tri[(k + 1) % 3];
      const Index lo = std::min(a, b);
      const Index hi = std::max(a, b);
      edges.push_back({(std::uint64_t{lo} << 32) | hi, a < b ? 1 : -1});
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const DirectedEdge& l, const DirectedEdge& r) {
              return l.key < r.key;
            });
  EdgeCensus census;
  for (std::size_t i = 0; i < edges.size();) {
    std::size_t j = i;
    int balance = 0;
    while (j < edges.size() && edges[j].key == edges[i].key) {
      balance += edges[j].sign;
      ++j;
    }
    const std::size_t uses = j - i;
    ++census.edges;
    if (uses == 1) ++census.boundary_edges;
    if (uses > 2) ++census.non_manifold_edges;
    if (balance != 0) ++census.unbalanced_edges;
    i = j;
  }
  return census;
}

}  // namespace

TriSurfaceMesh::TriSurfaceMesh(std::vector<Point3> vertices,
                               std::vector<Triangle> triangles,
                               std::vector<int> tags)
    : vertices_(std::move(vertices)),
      triangles_(std::move(triangles)),
      tags_(std::move(tags)) {
  if (!tags_.empty() && tags_.size() != triangles_.size()) {
    throw Error(ErrorCode::kInvalidMesh,
                "tag count " + std::to_string(tags_.size()) +
                    " does not match triangle count " +
                    std::to_string(triangles_.size()));
  }
  if (!vertices_.empty()) {
    aabb_ = AABB::of(vertices_.front());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (!is_finite(vertices_[i])) {
        throw Error(ErrorCode::kInvalidMesh,
                    "vertex " + std::to_string(i) + " is not finite");
      }
      aabb_.expand(vertices_[i]);
    }
  }
  epsilon_ = geometric_epsilon(aabb_);

  const std::size_t n = vertices_.size();
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const Triangle& tri = triangles_[t];
    if (tri[0] >= n || tri[1] >= n || tri[2] >= n) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "triangle " + std::to_string(t) + " references a vertex >= " +
                      std::to_string(n));
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
      throw Error(ErrorCode::kInvalidMesh,
                  "triangle " + std::to_string(t) + " repeats a vertex");
    }
    const double area =
        triangle_area(vertices_[tri[0]], vertices_[tri[1]], vertices_[tri[2]]);
    if (!(area > epsilon_)) {
      throw Error(ErrorCode::kInvalidMesh,
                  "triangle " + std::to_string(t) + " has area " +
                      std::to_string(area) + " below tolerance");
    }
  }

  census_ = census_of(triangles_);
  watertight_ = !triangles_.empty() && census_.boundary_edges == 0 &&
                census_.non_manifold_edges == 0 &&
                census_.unbalanced_edges == 0;
  closed_ = !triangles_.empty() && census_.unbalanced_edges == 0;
}

long TriSurfaceMesh::euler_characteristic() const {
  std::vector<bool> used(vertices_.size(), false);
  for (const Triangle& tri : triangles_) {
    for (Index v : tri) used[v] = true;
  }
  const long v = std::count(used.begin(), used.end(), true);
  return v - static_cast<long>(census_.edges) +
         static_cast<long>(triangles_.size());
}

AABB compute_aabb(const TriSurfaceMesh& surface) {
  if (surface.vertex_count() == 0) {
    throw Error(ErrorCode::kEmptyMesh, "surface has no vertices");
  }
  return surface.aabb();
}

double enclosed_volume(const TriSurfaceMesh& surface) {
  if (!surface.closed()) {
    throw Error(ErrorCode::kNotWatertight,
                "enclosed volume needs a closed surface");
  }
  // Relative to the box center to keep the sum well conditioned.
  const Point3 c = (surface.aabb().min + surface.aabb().max) * 0.5;
  double six_v = 0.0;
  for (std::size_t t = 0; t < surface.triangle_count(); ++t) {
    const auto [a, b, d] = surface.corners(t);
    six_v += dot(a - c, cross(b - c, d - c));
  }
  return six_v / 6.0;
}

double surface_area(const TriSurfaceMesh& surface) {
  double area = 0.0;
  for (std::size_t t = 0; t < surface.triangle_count(); ++t) {
    const auto [a, b, c] = surface.corners(t);
    area += triangle_area(a, b, c);
  }
  return area;
}

}  // namespace icmesh
