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
#include <cstdint>
#include <vector>

#include "icmesh/geometry.hpp"

namespace icmesh {

using Tet = std::array<Index, 4>;

enum class RegionLabel : std::uint8_t {
  kUnassigned = 0,
  kProtein = 1,
  kSolvent = 2,
  kMembrane = 3,
};

// Indexed tetrahedral mesh with one region label per tet. Tets are stored
// with positive signed volume: the constructor swaps the last two vertices
// of any negatively oriented tet and rejects flat ones.
class TetMesh {
 public:
  TetMesh() = default;
  TetMesh(std::vector<Point3> vertices, std::vector<Tet> tets,
          std::vector<RegionLabel> labels);

  const std::vector<Point3>& vertices() const { return vertices_; }
  const std::vector<Tet>& tets() const { return tets_; }
  const std::vector<RegionLabel>& labels() const { return labels_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t tet_count() const { return tets_.size(); }
  bool empty() const { return tets_.empty(); }

  RegionLabel label(std::size_t t) const { return labels_[t]; }
  // Only labels change after construction; geometry and connectivity are
  // fixed.
  void set_label(std::size_t t, RegionLabel label) { labels_[t] = label; }

  Point3 centroid(std::size_t t) const;
  double volume(std::size_t t) const;
  std::array<Point3, 4> corners(std::size_t t) const {
    const Tet& tet = tets_[t];
    return {vertices_[tet[0]], vertices_[tet[1]], vertices_[tet[2]],
            vertices_[tet[3]]};
  }

  AABB aabb() const;

 private:
  std::vector<Point3> vertices_;
  std::vector<Tet> tets_;
  std::vector<RegionLabel> labels_;
};

// Outward-facing faces of a positively oriented tet, as indices into the
// tet's own vertex array.
inline constexpr std::array<std::array<int, 3>, 4> kTetFaces = {{
    {1, 2, 3},
    {0, 2, 1},
    {0, 1, 3},
    {0, 3, 2},
}};

}  // namespace icmesh
