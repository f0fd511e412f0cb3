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

#include <vector>

#include "icmesh/cross_section.hpp"
#include "icmesh/geometry.hpp"
#include "icmesh/surface_mesh.hpp"

namespace icmesh {

// Lattice nodes over the box footprint at spacing close to h_m, row-major
// by (j, i).
std::vector<Vec2> membrane_grid(const BoxDomain& box, double h_m);

struct PlanePointOptions {
  // Keep nodes that lie on a cross-section loop. Off by default: such nodes
  // touch the protein surface.
  bool include_on_boundary = false;
};

// Lattice nodes at height z that are outside every cross-section loop of
// the protein (containment depth 0) and at least h_m / 2 away from them.
std::vector<Point3> select_plane_points(const TriSurfaceMesh& surface,
                                        const BoxDomain& box, double z,
                                        double h_m,
                                        const PlanePointOptions& options = {});

struct MembranePointSet {
  std::vector<Point3> s_b;  // at z1
  std::vector<Point3> s_t;  // at z2

  std::size_t size() const { return s_b.size() + s_t.size(); }
  std::vector<Point3> all() const;
};

MembranePointSet select_membrane_points(
    const TriSurfaceMesh& surface, const BoxDomain& box,
    const MembraneSlab& slab, double h_m,
    const PlanePointOptions& options = {});

}  // namespace icmesh
