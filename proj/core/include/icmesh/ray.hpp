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

#include "icmesh/geometry.hpp"

namespace icmesh {

// Barycentric band (relative units) within which a hit counts as touching
// an edge or vertex.
inline constexpr double kHitEpsilon = 1e-10;

struct RayHit {
  double t = 0.0;  // origin + t * direction
  double u = 0.0;  // weight of the second vertex
  double v = 0.0;  // weight of the third vertex
};

struct RayTriangleResult {
  std::optional<RayHit> hit;
  // Set when the outcome is numerically fragile: the hit (or near-miss) is
  // within kHitEpsilon of an edge or vertex, the origin lies on the
  // triangle, or the ray grazes the triangle's plane.
  bool degenerate = false;
};

// Moller-Trumbore. Only hits with t >= 0 are reported. Throws kInvalidRay
// for a zero direction.
RayTriangleResult ray_triangle_intersect(const Point3& origin,
                                         const Vec3& direction,
                                         const std::array<Point3, 3>& tri);

}  // namespace icmesh
