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

#include "icmesh/inclusion.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "icmesh/error.hpp"
#include "icmesh/ray.hpp"

namespace icmesh {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double unit_interval(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

}  // namespace

Vec3 query_ray_direction(const Point3& p, int attempt) {
  std::uint64_t state = std::bit_cast<std::uint64_t>(p.x);
  state = splitmix64(state) ^ std::bit_cast<std::uint64_t>(p.y);
  state = splitmix64(state) ^ std::bit_cast<std::uint64_t>(p.z);
  state = splitmix64(state) + static_cast<std::uint64_t>(attempt);
  splitmix64(state);
  const double z = 2.0 * unit_interval(state) - 1.0;
  const double phi = 2.0 * std::numbers::pi * unit_interval(state);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

ClosedSurfaceTester::ClosedSurfaceTester(const TriSurfaceMesh& surface)
    : surface_(&surface), bvh_(surface) {
  if (!surface.closed()) {
    throw Error(ErrorCode::kNotWatertight,
                "inclusion test needs a closed surface");
  }
}

bool ClosedSurfaceTester::contains(const Point3& p) const {
  if (!surface_->aabb().contains(p, surface_->epsilon())) return false;
  for (int attempt = 0; attempt <= kRayRetries; ++attempt) {
    const Vec3 dir = query_ray_direction(p, attempt);
    std::size_t crossings = 0;
    bool degenerate = false;
    bvh_.for_each_candidate(p, dir, [&](std::uint32_t t) {
      const RayTriangleResult r =
          ray_triangle_intersect(p, dir, surface_->corners(t));
      if (r.degenerate) {
        degenerate = true;
        return false;
      }
      if (r.hit && r.hit->t > 0.0) ++crossings;
      return true;
    });
    if (!degenerate) return crossings % 2 == 1;
  }
  throw Error(ErrorCode::kDegenerateQuery,
              "every ray from the query point met a degenerate crossing");
}

bool point_in_closed_surface(const Point3& p, const TriSurfaceMesh& surface) {
  return ClosedSurfaceTester(surface).contains(p);
}

double winding_number(const Point3& p, const TriSurfaceMesh& surface) {
  double total = 0.0;
  for (std::size_t t = 0; t < surface.triangle_count(); ++t) {
    const auto [a0, b0, c0] = surface.corners(t);
    const Vec3 a = a0 - p;
    const Vec3 b = b0 - p;
    const Vec3 c = c0 - p;
    const double la = norm(a);
    const double lb = norm(b);
    const double lc = norm(c);
    const double numer = dot(a, cross(b, c));
    const double denom =
        la * lb * lc + dot(a, b) * lc + dot(a, c) * lb + dot(b, c) * la;
    total += 2.0 * std::atan2(numer, denom);
  }
  return total / (4.0 * std::numbers::pi);
}

bool winding_number_inclusion(const Point3& p, const TriSurfaceMesh& surface) {
  if (!surface.closed()) {
    throw Error(ErrorCode::kNotWatertight,
                "winding number needs a closed surface");
  }
  const double eps = surface.epsilon();
  for (std::size_t t = 0; t < surface.triangle_count(); ++t) {
    const auto [a, b, c] = surface.corners(t);
    if (point_triangle_distance(p, a, b, c) <= eps) {
      throw Error(ErrorCode::kOnBoundary,
                  "query point lies on triangle " + std::to_string(t));
    }
  }
  return std::lround(winding_number(p, surface)) != 0;
}

double point_triangle_distance(const Point3& p, const Point3& a,
                               const Point3& b, const Point3& c) {
  // Closest-point by Voronoi region of the triangle.
  const Vec3 ab = b - a;
  const Vec3 ac = c - a;
  const Vec3 ap = p - a;
  const double d1 = dot(ab, ap);
  const double d2 = dot(ac, ap);
  if (d1 <= 0.0 && d2 <= 0.0) return norm(ap);

  const Vec3 bp = p - b;
  const double d3 = dot(ab, bp);
  const double d4 = dot(ac, bp);
  if (d3 >= 0.0 && d4 <= d3) return norm(bp);

  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
    const double v = d1 / (d1 - d3);
    return norm(p - (a + ab * v));
  }

  const Vec3 cp = p - c;
  const double d5 = dot(ab, cp);
  const double d6 = dot(ac, cp);
  if (d6 >= 0.0 && d5 <= d6) return norm(cp);

  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
    const double w = d2 / (d2 - d6);
    return norm(p - (a + ac * w));
  }

  const double va = d3 * d6 - d5 * d4;
  if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
    const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
    return norm(p - (b + (c - b) * w));
  }

  const double denom = 1.0 / (va + vb + vc);
  const double v = vb * denom;
  const double w = vc * denom;
  return norm(p - (a + ab * v + ac * w));
}

}  // namespace icmesh
