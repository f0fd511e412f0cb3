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

#include "icmesh/surface_mesh.hpp"

namespace icmesh {

// Closed polylines cut from a surface by the plane z = const. Loops are
// stored without repeating the first point; outer boundaries run
// counter-clockwise and holes clockwise when the surface is outward
// oriented.
struct PlanarLoopSet {
  double z = 0.0;            // plane actually used (may be shifted)
  double requested_z = 0.0;  // plane asked for
  double epsilon = 1e-9;
  std::vector<std::vector<Vec2>> loops;
  std::vector<int> depth;  // containing-loop count, 0 = outermost

  bool empty() const { return loops.empty(); }
};

// Plane shift applied when a vertex lies on the cutting plane, relative to
// the surface diagonal, and how often it is retried.
inline constexpr double kPlaneShift = 1e-6;
inline constexpr int kPlaneShiftRetries = 8;

// Throws kOpenCrossSection when the cut segments do not chain into closed
// loops.
PlanarLoopSet cross_section_loops(const TriSurfaceMesh& surface, double z);

struct LoopQuery {
  int depth = 0;
  bool on_boundary = false;
};

// Number of loops strictly containing q (even-odd per loop), plus whether q
// lies within the loop set's epsilon of a segment.
LoopQuery loop_containment_depth(const Vec2& q, const PlanarLoopSet& loops);

// Even-odd crossing test for a single closed polyline.
bool point_in_polygon(const Vec2& q, const std::vector<Vec2>& loop);

double point_segment_distance(const Vec2& q, const Vec2& a, const Vec2& b);

// Smallest distance from q to any loop segment.
double distance_to_loops(const Vec2& q, const PlanarLoopSet& loops);

}  // namespace icmesh
