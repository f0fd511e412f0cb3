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

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "icmesh/geometry.hpp"

namespace icmesh {

using Triangle = std::array<Index, 3>;

struct EdgeCensus {
  std::size_t edges = 0;
  std::size_t boundary_edges = 0;     // incidence 1
  std::size_t non_manifold_edges = 0; // incidence > 2
  std::size_t unbalanced_edges = 0;   // directed uses do not cancel
};

// Indexed triangle surface. Construction validates indices, finiteness and
// triangle areas, and records the edge census once; the mesh is immutable
// afterwards.
//
//  watertight(): every undirected edge is used by exactly two triangles.
//  closed():     every undirected edge is used an even number of times and
//                its two directions are used equally often. Boundaries of
//                arbitrary tet subsets are closed but may pinch along edges.
class TriSurfaceMesh {
 public:
  TriSurfaceMesh() = default;
  TriSurfaceMesh(std::vector<Point3> vertices, std::vector<Triangle> triangles,
                 std::vector<int> tags = {});

  const std::vector<Point3>& vertices() const { return vertices_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  // Empty when the surface carries no per-triangle labels.
  const std::vector<int>& tags() const { return tags_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t triangle_count() const { return triangles_.size(); }
  bool empty() const { return triangles_.empty(); }

  bool watertight() const { return watertight_; }
  bool closed() const { return closed_; }
  const EdgeCensus& edge_census() const { return census_; }

  const AABB& aabb() const { return aabb_; }
  double epsilon() const { return epsilon_; }

  std::array<Point3, 3> corners(std::size_t t) const {
    const Triangle& tri = triangles_[t];
    return {vertices_[tri[0]], vertices_[tri[1]], vertices_[tri[2]]};
  }

  // V - E + F over referenced vertices.
  long euler_characteristic() const;

 private:
  std::vector<Point3> vertices_;
  std::vector<Triangle> triangles_;
  std::vector<int> tags_;
  EdgeCensus census_;
  AABB aabb_;
  double epsilon_ = 1e-9;
  bool watertight_ = false;
  bool closed_ = false;
};

// Component-wise min/max over all vertices. Throws kEmptyMesh.
AABB compute_aabb(const TriSurfaceMesh& surface);

// Divergence-theorem volume; positive for outward orientation. Throws
// kNotWatertight unless the surface is closed.
double enclosed_volume(const TriSurfaceMesh& surface);

double surface_area(const TriSurfaceMesh& surface);

}  // namespace icmesh
