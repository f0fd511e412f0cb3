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

#include "icmesh/topology.hpp"

#include <algorithm>
#include <numeric>

#include "icmesh/error.hpp"

namespace icmesh {
namespace {

using FaceKey = std::array<Index, 3>;

FaceKey sorted_key(Index a, Index b, Index c) {
  FaceKey k{a, b, c};
  std::sort(k.begin(), k.end());
  return k;
}

struct FaceRecord {
  FaceKey key;
  std::uint32_t owner;  // position in the subset
  std::uint8_t face;    // kTetFaces slot
};

std::vector<FaceRecord> collect_faces(const TetMesh& mesh,
                                      std::span<const Index> subset) {
  std::vector<FaceRecord> faces;
  faces.reserve(subset.size() * 4);
  for (std::size_t k = 0; k < subset.size(); ++k) {
    const Tet& tet = mesh.tets()[subset[k]];
    for (std::uint8_t f = 0; f < 4; ++f) {
      const auto& fv = kTetFaces[f];
      faces.push_back({sorted_key(tet[fv[0]], tet[fv[1]], tet[fv[2]]),
                       static_cast<std::uint32_t>(k), f});
    }
  }
  std::sort(faces.begin(), faces.end(),
            [](const FaceRecord& l, const FaceRecord& r) {
              return l.key < r.key;
            });
  return faces;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;  // smaller index becomes the root
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

TriSurfaceMesh boundary_surface(const TetMesh& mesh,
                                std::span<const Index> subset) {
  if (subset.empty()) {
    throw Error(ErrorCode::kEmptySubset, "boundary of an empty tet subset");
  }
  const std::vector<FaceRecord> faces = collect_faces(mesh, subset);

  std::vector<Triangle> triangles;
  for (std::size_t i = 0; i < faces.size();) {
    std::size_t j = i + 1;
    while (j < faces.size() && faces[j].key == faces[i].key) ++j;
    if (j - i == 1) {
      const Tet& tet = mesh.tets()[subset[faces[i].owner]];
      const auto& fv = kTetFaces[faces[i].face];
      triangles.push_back({tet[fv[0]], tet[fv[1]], tet[fv[2]]});
    }
    i = j;
  }

  std::vector<Index> used;
  used.reserve(triangles.size() * 3);
  for (const Triangle& tri : triangles) {
    used.insert(used.end(), tri.begin(), tri.end());
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());

  std::vector<Point3> vertices;
  vertices.reserve(used.size());
  for (Index v : used) vertices.push_back(mesh.vertices()[v]);
  for (Triangle& tri : triangles) {
    for (Index& v : tri) {
      v = static_cast<Index>(
          std::lower_bound(used.begin(), used.end(), v) - used.begin());
    }
  }
  return TriSurfaceMesh(std::move(vertices), std::move(triangles));
}

TriSurfaceMesh boundary_surface(const TetMesh& mesh,
                                const TetPredicate& in_subset) {
  std::vector<Index> subset;
  for (std::size_t t = 0; t < mesh.tet_count(); ++t) {
    if (in_subset(t)) subset.push_back(static_cast<Index>(t));
  }
  return boundary_surface(mesh, subset);
}

std::vector<TriSurfaceMesh> surface_connected_components(
    const TriSurfaceMesh& surface) {
  const std::size_t n = surface.triangle_count();
  struct EdgeUse {
    std::uint64_t key;
    std::uint32_t tri;
  };
  std::vector<EdgeUse> uses;
  uses.reserve(3 * n);
  for (std::size_t t = 0; t < n; ++t) {
    const Triangle& tri = surface.triangles()[t];
    for (int k = 0; k < 3; ++k) {
      const Index a = std::min(tri[k], tri[(k + 1) % 3]);
      const Index b = std::max(tri[k], tri[(k + 1) % 3]);
      uses.push_back({(std::uint64_t{a} << 32) | b,
                      static_cast<std::uint32_t>(t)});
    }
  }
  std::sort(uses.begin(), uses.end(),
            [](const EdgeUse& l, const EdgeUse& r) { return l.key < r.key; });
  UnionFind sets(n);
  for (std::size_t i = 1; i < uses.size(); ++i) {
    if (uses[i].key == uses[i - 1].key) sets.unite(uses[i].tri, uses[i - 1].tri);
  }

  // Roots are the smallest triangle index of each set, so walking triangles
  // in order visits components in order of their first triangle.
  std::vector<std::int64_t> component_of_root(n, -1);
  std::vector<std::vector<std::uint32_t>> members;
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t root = sets.find(t);
    if (component_of_root[root] < 0) {
      component_of_root[root] = static_cast<std::int64_t>(members.size());
      members.emplace_back();
    }
    members[component_of_root[root]].push_back(static_cast<std::uint32_t>(t));
  }

  const bool tagged = !surface.tags().empty();
  std::vector<TriSurfaceMesh> components;
  components.reserve(members.size());
  std::vector<std::int64_t> remap(surface.vertex_count(), -1);
  for (const auto& group : members) {
    std::vector<Point3> vertices;
    std::vector<Triangle> triangles;
    std::vector<int> tags;
    triangles.reserve(group.size());
    for (std::uint32_t t : group) {
      Triangle tri = surface.triangles()[t];
      for (Index& v : tri) {
        if (remap[v] < 0) {
          remap[v] = static_cast<std::int64_t>(vertices.size());
          vertices.push_back(surface.vertices()[v]);
        }
        v = static_cast<Index>(remap[v]);
      }
      triangles.push_back(tri);
      if (tagged) tags.push_back(surface.tags()[t]);
    }
    for (std::uint32_t t : group) {
      for (Index v : surface.triangles()[t]) remap[v] = -1;
    }
    components.emplace_back(std::move(vertices), std::move(triangles),
                            std::move(tags));
  }
  return components;
}

SubsetAdjacency subset_face_adjacency(const TetMesh& mesh,
                                      std::span<const Index> subset) {
  SubsetAdjacency adj;
  adj.neighbor.assign(subset.size(), {-1, -1, -1, -1});
  const std::vector<FaceRecord> faces = collect_faces(mesh, subset);
  for (std::size_t i = 1; i < faces.size(); ++i) {
    if (faces[i].key == faces[i - 1].key) {
      adj.neighbor[faces[i].owner][faces[i].face] = faces[i - 1].owner;
      adj.neighbor[faces[i - 1].owner][faces[i - 1].face] = faces[i].owner;
    }
  }
  return adj;
}

}  // namespace icmesh
