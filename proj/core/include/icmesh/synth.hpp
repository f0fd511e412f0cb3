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

#include <string_view>
#include <optional>

#include "icmesh/geometry.hpp"
#include "icmesh/surface_mesh.hpp"
#include "icmesh/tet_mesh.hpp"

namespace icmesh::synth {

enum class Kind { kTube, kHourglass, kTwoPore };

std::optional<Kind> parse_kind(std::string_view name);
std::string_view kind_name(Kind kind);

// Analytic stand-ins for channel proteins: annular solids around the z axis
// (or two of them side by side along x).
struct SynthSpec {
  Kind kind = Kind::kTube;
  double r_inner = 2.0;
  double r_outer = 5.0;
  double z_min = -15.0;
  double z_max = 15.0;
  int n_theta = 64;
  // hourglass: inner radius grows by this factor at z_min and z_max
  double slope = 0.0;
  int n_z = 12;  // hourglass ring levels minus one
  // two_pore: axes at x = -center_offset and x = +center_offset
  double center_offset = 25.0;
};

// Throws kInvalidSpec.
void validate(const SynthSpec& spec);

// Inner radius of the pore at height z (clamped to the solid's z-range).
double inner_radius(const SynthSpec& spec, double z);

// Area of the regular n-gon inscribed in a circle of radius r.
double polygon_area(int n, double r);

TriSurfaceMesh make_tube(const SynthSpec& spec);
TriSurfaceMesh make_hourglass(const SynthSpec& spec);
TriSurfaceMesh make_two_pore(const SynthSpec& spec);
TriSurfaceMesh make_surface(const SynthSpec& spec);

// Axis positions (x, y) of the annular solids.
std::vector<Vec2> axes(const SynthSpec& spec);

struct FixtureMeshOptions {
  double h = 1.0;  // target edge length
  // Treat the pore as part of the protein (a solid cylinder).
  bool fill_pore = false;
};

// Interface-fitted tetrahedral mesh of the box for the synthetic protein:
// label 1 inside the solid, 2 elsewhere. The horizontal layers include the
// slab planes, the solid's end planes and every ring level, so the result
// plays the role of a tetrahedralizer run on the assembled PLC. Requires
// n_theta divisible by 8.
TetMesh make_fixture_tet_mesh(const SynthSpec& spec, const BoxDomain& box,
                              const MembraneSlab& slab,
                              const FixtureMeshOptions& options);

}  // namespace icmesh::synth
