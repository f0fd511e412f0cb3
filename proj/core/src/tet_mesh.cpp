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

#include "icmesh/tet_mesh.hpp"

#include <string>
#include <utility>

#include "icmesh/error.hpp"

namespace icmesh {

TetMesh::TetMesh(std::vector<Point3> vertices, std::vector<Tet> tets,
                 std::vector<RegionLabel> labels)
    : vertices_(std::move(vertices)),
      tets_(std::move(tets)),
      labels_(std::move(labels)) {
  if (labels_.size() != tets_.size()) {
    throw Error(ErrorCode::kInvalidMesh,
                "label count " + std::to_string(labels_.size()) +
                    " does not match tet count " +
                    std::to_string(tets_.size()));
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!is_finite(vertices_[i])) {
      throw Error(ErrorCode::kInvalidMesh,
                  "vertex " + std::to_string(i) + " is not finite");
    }
  }
  const std::size_t n = vertices_.size();
  for (std::size_t t = 0; t < tets_.size(); ++t) {
    Tet& tet = tets_[t];
    for (Index v : tet) {
      if (v >= n) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "tet " + std::to_string(t) + " references vertex " +
                        std::to_string(v) + " of " + std::to_string(n));
      }
    }
    if (static_cast<int>(labels_[t]) > 3) {
      throw Error(ErrorCode::kInvalidMesh,
                  "tet " + std::to_string(t) + " has label " +
                      std::to_string(static_cast<int>(labels_[t])));
    }
    const double o = orient3d(vertices_[tet[0]], vertices_[tet[1]],
                              vertices_[tet[2]], vertices_[tet[3]]);
    if (o < 0.0) {
      std::swap(tet[2], tet[3]);
    } else if (o == 0.0) {
      throw Error(ErrorCode::kInvalidMesh,
                  "tet " + std::to_string(t) + " has zero volume");
    }
  }
}

Point3 TetMesh::centroid(std::size_t t) const {
  const auto [a, b, c, d] = corners(t);
  return (a + b + c + d) * 0.25;
}

double TetMesh::volume(std::size_t t) const {
  const auto [a, b, c, d] = corners(t);
  return tet_volume(a, b, c, d);
}

AABB TetMesh::aabb() const {
  if (vertices_.empty()) return {};
  AABB box = AABB::of(vertices_.front());
  for (const Point3& p : vertices_) box.expand(p);
  return box;
}

}  // namespace icmesh
