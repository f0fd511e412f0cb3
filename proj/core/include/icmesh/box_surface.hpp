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
#include <string_view>

#include "icmesh/geometry.hpp"
#include "icmesh/surface_mesh.hpp"

namespace icmesh {

inline constexpr std::array<double, 3> kDefaultMargins = {20.0, 20.0, 20.0};

// Protein bounding box grown by (eta1, eta2, eta3) on each side. Throws
// kInvalidMargin for a nonpositive margin.
BoxDomain build_box_domain(const AABB& protein_box,
                           const std::array<double, 3>& margins =
                               kDefaultMargins);

struct GridFit {
  int n = 1;
  double h = 0.0;
};

// Number of uniform cells covering `length` closest to size h, and the
// resulting cell size.
GridFit grid_fit(double length, double h);

// k-th of n+1 uniformly spaced coordinates on [lo, hi]; the last one is hi
// exactly. Every lattice in the project goes through this so that shared
// points coincide bit for bit.
double lattice_coordinate(double lo, double hi, int n, int k);

enum class BoxSurfaceTag : int {
  kBottomD = 0,
  kTopD = 1,
  kLatS1 = 2,
  kLatS2 = 3,
  kLatM = 4,
  kLatS3 = 5,
  kLatS4 = 6,
};

std::string_view box_tag_name(BoxSurfaceTag tag);

struct MeshSizes {
  double h_m = 1.0;  // membrane band
  double h_s = 2.0;  // everything else, top and bottom faces included

  static MeshSizes from_membrane(double h_m) { return {h_m, 2.0 * h_m}; }
};

struct BoxSurface {
  TriSurfaceMesh surface;  // tags are BoxSurfaceTag values
  // Realised grid: cells per direction and the actual sizes.
  GridFit fine_x, fine_y, coarse_x, coarse_y;
  GridFit below, membrane, above;  // vertical rows
};

// Watertight, outward-oriented triangulation of the box boundary with a
// h_m band on the lateral faces over [z1, z2], one transition row on each
// side of it, and h_s elsewhere. Throws kSlabTooClose when less than one
// coarse row fits between the slab and the box floor or ceiling.
BoxSurface assemble_box_surface(const BoxDomain& box, const MembraneSlab& slab,
                                const MeshSizes& sizes);

}  // namespace icmesh
