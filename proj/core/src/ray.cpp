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

#include "icmesh/ray.hpp"

#include <algorithm>
#include <cmath>

#include "icmesh/error.hpp"

namespace icmesh {

RayTriangleResult ray_triangle_intersect(const Point3& origin,
                                         const Vec3& direction,
                                         const std::array<Point3, 3>& tri) {
  const double dir_len = norm(direction);
  if (!(dir_len > 0.0) || !std::isfinite(dir_len)) {
    throw Error(ErrorCode::kInvalidRay, "ray direction must be nonzero");
  }
  const Point3& a = tri[0];
  const Vec3 e1 = tri[1] - a;
  const Vec3 e2 = tri[2] - a;
  const Vec3 normal = cross(e1, e2);
  const double normal_len = norm(normal);
  const double length_scale = std::sqrt(normal_len);

  RayTriangleResult result;
  const Vec3 pvec = cross(direction, e2);
  const double det = dot(e1, pvec);
  if (std::abs(det) <= kHitEpsilon * dir_len * normal_len) {
    // Parallel to the plane: fragile only if the ray runs inside it.
    const double dist = std::abs(dot(origin - a, normal)) / normal_len;
    result.degenerate = dist <= kHitEpsilon * length_scale;
    return result;
  }

  const double inv_det = 1.0 / det;
  const Vec3 tvec = origin - a;
  const double u = dot(tvec, pvec) * inv_det;
  const Vec3 qvec = cross(tvec, e1);
  const double v = dot(direction, qvec) * inv_det;
  const double t = dot(e2, qvec) * inv_det;
  const double w = 1.0 - u - v;

  const double closest = std::min({u, v, w});
  if (closest < -kHitEpsilon) return result;  // clear miss

  const bool near_edge = closest <= kHitEpsilon;
  const bool origin_on_triangle =
      std::abs(t) * dir_len <= kHitEpsilon * length_scale;
  result.degenerate = near_edge || origin_on_triangle;
  if (closest >= 0.0 && t >= 0.0) result.hit = RayHit{t, u, v};
  return result;
}

}  // namespace icmesh
