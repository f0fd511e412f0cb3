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

#include <cstdint>
#include <memory>

#include "icmesh/bvh.hpp"
#include "icmesh/surface_mesh.hpp"

namespace icmesh {

// Ray directions re-drawn after a degenerate crossing before giving up.
inline constexpr int kRayRetries = 8;

// Deterministic unit direction number `attempt` for query point p. The
// sequence is seeded from the bit patterns of p's coordinates, so repeated
// runs cast identical rays.
Vec3 query_ray_direction(const Point3& p, int attempt);

// Parity-of-crossings inclusion test against one closed surface, with a
// BVH built once and reused across queries. Safe for concurrent queries.
class ClosedSurfaceTester {
 public:
  // Throws kNotWatertight unless the surface is closed.
  explicit ClosedSurfaceTester(const TriSurfaceMesh& surface);

  // True iff p is strictly inside. Throws kDegenerateQuery when every
  // re-drawn ray meets a degenerate crossing (p on the surface, typically).
  bool contains(const Point3& p) const;

  const TriSurfaceMesh& surface() const { return *surface_; }

 private:
  const TriSurfaceMesh* surface_;
  TriangleBvh bvh_;
};

bool point_in_closed_surface(const Point3& p, const TriSurfaceMesh& surface);

// Sum of signed solid angles subtended by the triangles at p, divided by 4pi.
double winding_number(const Point3& p, const TriSurfaceMesh& surface);

// True iff the winding number rounds to a nonzero integer. Throws
// kOnBoundary when p is within the surface's epsilon of a triangle and
// kNotWatertight unless the surface is closed.
bool winding_number_inclusion(const Point3& p, const TriSurfaceMesh& surface);

// Closest distance from p to triangle (a, b, c).
double point_triangle_distance(const Point3& p, const Point3& a,
                               const Point3& b, const Point3& c);

}  // namespace icmesh
