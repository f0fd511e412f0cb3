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
#include <vector>

#include "icmesh/surface_mesh.hpp"

namespace icmesh {

// Binary bounding-volume hierarchy over the triangles of a surface.
class TriangleBvh {
 public:
  explicit TriangleBvh(const TriSurfaceMesh& surface);

  // Calls visit(triangle_index) for every triangle whose box the ray
  // reaches. visit returns false to stop the traversal early.
  template <typename Visit>
  void for_each_candidate(const Point3& origin, const Vec3& direction,
                          Visit&& visit) const;

 private:
  struct Node {
    AABB box;
    std::uint32_t first = 0;  // leaf: offset into order_; inner: left child
    std::uint32_t count = 0;  // 0 for inner nodes
    std::uint32_t right = 0;
  };

  std::uint32_t build(std::uint32_t begin, std::uint32_t end,
                      const std::vector<AABB>& boxes,
                      const std::vector<Point3>& centers);
  static bool ray_hits_box(const AABB& box, const Point3& origin,
                           const Vec3& inv_dir);

  std::vector<Node> nodes_;
  std::vector<std::uint32_t> order_;
};

template <typename Visit>
void TriangleBvh::for_each_candidate(const Point3& origin,
                                     const Vec3& direction,
                                     Visit&& visit) const {
  if (nodes_.empty()) return;
  const Vec3 inv{1.0 / direction.x, 1.0 / direction.y, 1.0 / direction.z};
  std::uint32_t stack[64];
  int top = 0;
  stack[top++] = 0;
  while (top > 0) {
    const Node& node = nodes_[stack[--top]];
    if (!ray_hits_box(node.box, origin, inv)) continue;
    if (node.count > 0) {
      for (std::uint32_t i = 0; i < node.count; ++i) {
        if (!visit(order_[node.first + i])) return;
      }
    } else {
      stack[top++] = node.first;
      stack[top++] = node.right;
    }
  }
}

}  // namespace icmesh
