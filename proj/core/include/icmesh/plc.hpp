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

#include <string>
#include <string_view>

#include "icmesh/mesh_io.hpp"
#include "icmesh/surface_mesh.hpp"

namespace icmesh {

// Switches the shipped configuration passes to TetGen. `Q` is dropped in
// verbose mode.
inline constexpr std::string_view kTetgenSwitches = "-q1.2aVpiT1e-10AAYYCnQ";

std::string tetgen_switches(bool verbose);

// Interior point of the protein solid: centroid of the largest triangle
// pushed inward by 2 eps, doubling the push up to 8 times until the
// inclusion test agrees. Throws kDegenerateQuery if it never does.
Point3 protein_seed(const TriSurfaceMesh& protein);

// Point near the (lx1, ly1, lz1) corner, outside the protein.
Point3 solvent_seed(const BoxDomain& box, const TriSurfaceMesh& protein);

// Protein facets (marker 1), box facets (marker 2), membrane points as
// isolated nodes, and seeds 1 (protein) and 2 (expanded solvent). Membrane
// points that coincide with a box vertex reuse that node.
PlcDocument assemble_plc(const TriSurfaceMesh& protein,
                         const TriSurfaceMesh& box_surface,
                         const BoxDomain& box,
                         const std::vector<Point3>& membrane_points);

}  // namespace icmesh
