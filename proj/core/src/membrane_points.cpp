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

#include "icmesh/membrane_points.hpp"

#include "icmesh/box_surface.hpp"

namespace icmesh {

std::vector<Vec2> membrane_grid(const BoxDomain& box, double h_m) {
  const GridFit gx = grid_fit(box.length_x(), h_m);
  const GridFit gy = grid_fit(box.length_y(), h_m);
  std::vector<Vec2> grid;
  grid.reserve(static_cast<std::size_t>(gx.n + 1) * (gy.n + 1));
  for (int j = 0; j <= gy.n; ++j) {
    const double y = lattice_coordinate(box.ly1, box.ly2, gy.n, j);
    for (int i = 0; i <= gx.n; ++i) {
      grid.push_back({lattice_coordinate(box.lx1, box.lx2, gx.n, i), y});
    }
  }
  return grid;
}

std::vector<Point3> select_plane_points(const TriSurfaceMesh& surface,
                                        const BoxDomain& box, double z,
                                        double h_m,
                                        const PlanePointOptions& options) {
  const std::vector<Vec2> grid = membrane_grid(box, h_m);
  std::vector<Point3> selected;
  selected.reserve(grid.size());

  const AABB& extent = surface.aabb();
  if (surface.empty() || z <= extent.min.z || z >= extent.max.z) {
    for (const Vec2& q : grid) selected.push_back({q.x, q.y, z});
    return selected;
  }

  const PlanarLoopSet loops = cross_section_loops(surface, z);
  const double clearance = 0.5 * h_m;
  for (const Vec2& q : grid) {
    const double dist = distance_to_loops(q, loops);
    bool keep;
    if (dist <= loops.epsilon) {
      keep = options.include_on_boundary;
    } else {
      int depth = 0;
      for (const auto& loop : loops.loops) depth += point_in_polygon(q, loop);
      keep = depth == 0 && dist >= clearance;
    }
    if (keep) selected.push_back({q.x, q.y, z});
  }
  return selected;
}

std::vector<Point3> MembranePointSet::all() const {
  std::vector<Point3> out(s_b);
  out.insert(out.end(), s_t.begin(), s_t.end());
  return out;
}

MembranePointSet select_membrane_points(const TriSurfaceMesh& surface,
                                        const BoxDomain& box,
                                        const MembraneSlab& slab, double h_m,
                                        const PlanePointOptions& options) {
  return {select_plane_points(surface, box, slab.z1, h_m, options),
          select_plane_points(surface, box, slab.z2, h_m, options)};
}

}  // namespace icmesh
