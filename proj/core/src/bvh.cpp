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

#include "icmesh/bvh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace icmesh {
namespace {

constexpr std::uint32_t kLeafSize = 4;

}  // namespace

TriangleBvh::TriangleBvh(const TriSurfaceMesh& surface) {
  const std::size_t n = surface.triangle_count();
  if (n == 0) return;
  std::vector<AABB> boxes(n);
  std::vector<Point3> centers(n);
  for (std::size_t t = 0; t < n; ++t) {
    const auto [a, b, c] = surface.corners(t);
    AABB box = AABB::of(a);
    box.expand(b);
    box.expand(c);
    // Pad flat boxes so axis-parallel triangles are never skipped.
    const double pad = surface.epsilon();
    box.min -= Vec3{pad, pad, pad};
    box.max += Vec3{pad, pad, pad};
    boxes[t] = box;
    centers[t] = (a + b + c) * (1.0 / 3.0);
  }
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0u);
  nodes_.reserve(2 * n / kLeafSize + 1);
  build(0, static_cast<std::uint32_t>(n), boxes, centers);
}

std::uint32_t TriangleBvh::build(std::uint32_t begin, std::uint32_t end,
                                 const std::vector<AABB>& boxes,
                                 const std::vector<Point3>& centers) {
  const std::uint32_t index = static_cast<std::uint32_t>(nodes_.size());
  nodes_.emplace_back();
  AABB box = boxes[order_[begin]];
  AABB center_box = AABB::of(centers[order_[begin]]);
  for (std::uint32_t i = begin; i < end; ++i) {
    box.expand(boxes[order_[i]].min);
    box.expand(boxes[order_[i]].max);
    center_box.expand(centers[order_[i]]);
  }
  nodes_[index].box = box;

  if (end - begin <= kLeafSize) {
    nodes_[index].first = begin;
    nodes_[index].count = end - begin;
    return index;
  }

  const Vec3 ext = center_box.extent();
  int axis = 0;
  if (ext.y > ext.x) axis = 1;
  if (ext.z > ext[axis]) axis = 2;
  const std::uint32_t mid = begin + (end - begin) / 2;
  std::nth_element(order_.begin() + begin, order_.begin() + mid,
                   order_.begin() + end,
                   [&](std::uint32_t l, std::uint32_t r) {
                     return centers[l][axis] < centers[r][axis];
                   });
  const std::uint32_t left = build(begin, mid, boxes, centers);
  const std::uint32_t right = build(mid, end, boxes, centers);
  nodes_[index].first = left;
  nodes_[index].right = right;
  nodes_[index].count = 0;
  return index;
}

bool TriangleBvh::ray_hits_box(const AABB& box, const Point3& origin,
                               const Vec3& inv_dir) {
  double t_enter = 0.0;
  double t_exit = std::numeric_limits<double>::infinity();
  for (int axis = 0; axis < 3; ++axis) {
    const double o = origin[axis];
    const double lo = box.min[axis];
    const double hi = box.max[axis];
    const double inv = inv_dir[axis];
    if (std::isinf(inv)) {
      if (o < lo || o > hi) return false;
      continue;
    }
    double t0 = (lo - o) * inv;
    double t1 = (hi - o) * inv;
    if (t0 > t1) std::swap(t0, t1);
    t_enter = std::max(t_enter, t0);
    t_exit = std::min(t_exit, t1);
    if (t_enter > t_exit) return false;
  }
  return true;
}

}  // namespace icmesh
