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

#include <functional>
#include <span>
#include <vector>

#include "icmesh/surface_mesh.hpp"
#include "icmesh/tet_mesh.hpp"

namespace icmesh {

using TetPredicate = std::function<bool(std::size_t)>;

// Faces used by exactly one tet of the subset, oriented away from it.
// Vertices are re-indexed in increasing order of their mesh index. Throws
// kEmptySubset when no tet is selected.
TriSurfaceMesh boundary_surface(const TetMesh& mesh,
                                const TetPredicate& in_subset);
TriSurfaceMesh boundary_surface(const TetMesh& mesh,
                                std::span<const Index> subset);

// Maximal edge-connected triangle groups, ordered by their first triangle.
// Each component re-indexes its own vertices in order of first use.
std::vector<TriSurfaceMesh> surface_connected_components(
    const TriSurfaceMesh& surface);

// Face-adjacency among the tets of a subset. neighbor[k][f] is the position
// (in the subset) of the tet sharing face f of subset[k], or -1.
struct SubsetAdjacency {
  std::vector<std::array<std::int64_t, 4>> neighbor;
};
SubsetAdjacency subset_face_adjacency(const TetMesh& mesh,
                                      std::span<const Index> subset);

}  // namespace icmesh
