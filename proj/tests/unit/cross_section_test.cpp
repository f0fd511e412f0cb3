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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "error_code.hpp"
#include "icmesh/cross_section.hpp"
#include "icmesh/synth.hpp"
#include "oracles.hpp"

namespace icmesh {
namespace {

using testing::code_of;

double loop_area(const std::vector<Vec2>& loop) {
  return testing::shoelace_area(loop);
}

// Every polygon corner appears in the loop and every loop vertex lies on
// the polygon. Chords through split quads add collinear vertices.
void expect_same_polygon(const std::vector<Vec2>& loop,
                         const std::vector<Vec2>& poly, double tol) {
  ASSERT_GE(loop.size(), poly.size());
  for (const Vec2& p : loop) {
    EXPECT_LT(testing::min_distance_to_polygon(p, poly), tol)
        << p.x << ", " << p.y;
  }
  for (const Vec2& q : poly) {
    const bool found = std::any_of(loop.begin(), loop.end(), [&](const Vec2& p) {
      return std::hypot(p.x - q.x, p.y - q.y) < tol;
    });
    EXPECT_TRUE(found) << q.x << ", " << q.y;
  }
}

TEST(CrossSection, UnitCubeGivesOneSquare) {
  const PlanarLoopSet set = cross_section_loops(testing::unit_cube(), 0.5);
  ASSERT_EQ(set.loops.size(), 1u);
  EXPECT_EQ(set.depth[0], 0);
  EXPECT_DOUBLE_EQ(set.z, 0.5);
  EXPECT_NEAR(std::abs(loop_area(set.loops[0])), 1.0, 1e-12);
  EXPECT_GT(loop_area(set.loops[0]), 0.0);  // outer loop counter-clockwise
}

TEST(CrossSection, PlaneAboveIsEmpty) {
  EXPECT_TRUE(cross_section_loops(testing::unit_cube(), 3.0).empty());
}

TEST(CrossSection, TubeGivesTwoNestedPolygons) {
  const TriSurfaceMesh tube = synth::make_tube({});
  const PlanarLoopSet set = cross_section_loops(tube, 0.0);
  ASSERT_EQ(set.loops.size(), 2u);
  const int outer = std::abs(loop_area(set.loops[0])) >
                            std::abs(loop_area(set.loops[1]))
                        ? 0
                        : 1;
  const int inner = 1 - outer;
  EXPECT_EQ(set.depth[outer], 0);
  EXPECT_EQ(set.depth[inner], 1);
  expect_same_polygon(set.loops[outer], testing::regular_polygon(64, 5.0), 1e-9);
  expect_same_polygon(set.loops[inner], testing::regular_polygon(64, 2.0), 1e-9);
  EXPECT_GT(loop_area(set.loops[outer]), 0.0);
  EXPECT_LT(loop_area(set.loops[inner]), 0.0);  // hole runs clockwise
  EXPECT_NEAR(loop_area(set.loops[outer]), synth::polygon_area(64, 5.0), 1e-9);
}

TEST(CrossSection, PlaneThroughVerticesIsShifted) {
  synth::SynthSpec spec;
  spec.kind = synth::Kind::kHourglass;
  spec.slope = 0.5;
  const TriSurfaceMesh hg = synth::make_hourglass(spec);
  // z = 0 is a ring level of the hourglass (n_z = 12).
  const PlanarLoopSet set = cross_section_loops(hg, 0.0);
  EXPECT_EQ(set.requested_z, 0.0);
  EXPECT_NE(set.z, 0.0);
  EXPECT_LT(std::abs(set.z), 1e-4);
  ASSERT_EQ(set.loops.size(), 2u);
}

TEST(CrossSection, EveryPlaneOfTheHourglassCloses) {
  synth::SynthSpec spec;
  spec.kind = synth::Kind::kHourglass;
  spec.slope = 0.5;
  const TriSurfaceMesh hg = synth::make_hourglass(spec);
  for (double z = -14.9; z < 15.0; z += 0.37) {
    const PlanarLoopSet set = cross_section_loops(hg, z);
    EXPECT_EQ(set.loops.size(), 2u) << "z = " << z;
  }
}

TEST(CrossSection, OpenSurfaceRaises) {
  const TriSurfaceMesh tri({{0, 0, 0}, {1, 0, 1}, {0, 1, 1}}, {{0, 1, 2}});
  EXPECT_EQ(code_of([&] { cross_section_loops(tri, 0.5); }),
            ErrorCode::kOpenCrossSection);
}

TEST(ContainmentDepth, Square) {
  PlanarLoopSet set;
  set.loops = {{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
  set.depth = {0};
  EXPECT_EQ(loop_containment_depth({0.5, 0.5}, set).depth, 1);
  EXPECT_EQ(loop_containment_depth({2, 2}, set).depth, 0);
  EXPECT_TRUE(loop_containment_depth({1.0, 0.5}, set).on_boundary);
  EXPECT_FALSE(loop_containment_depth({0.5, 0.5}, set).on_boundary);
}

TEST(ContainmentDepth, TubeMatchesBruteForce) {
  const PlanarLoopSet set = cross_section_loops(synth::make_tube({}), 0.0);
  EXPECT_EQ(loop_containment_depth({0, 0}, set).depth, 2);
  EXPECT_EQ(loop_containment_depth({3, 0}, set).depth, 1);
  EXPECT_EQ(loop_containment_depth({7, 0}, set).depth, 0);

  const auto outer = testing::regular_polygon(64, 5.0);
  const auto inner = testing::regular_polygon(64, 2.0);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-7.0, 7.0);
  for (int i = 0; i < 5000; ++i) {
    const Vec2 q{u(rng), u(rng)};
    const int brute = testing::crossing_number_inside(q, outer) +
                      testing::crossing_number_inside(q, inner);
    EXPECT_EQ(loop_containment_depth(q, set).depth, brute);
  }
}

TEST(DistanceToLoops, SegmentDistance) {
  EXPECT_DOUBLE_EQ(point_segment_distance({0, 1}, {-1, 0}, {1, 0}), 1.0);
  EXPECT_DOUBLE_EQ(point_segment_distance({3, 0}, {-1, 0}, {1, 0}), 2.0);
  const PlanarLoopSet set = cross_section_loops(synth::make_tube({}), 0.0);
  EXPECT_NEAR(distance_to_loops({7, 0}, set), 2.0, 1e-12);
  EXPECT_NEAR(distance_to_loops({0, 0}, set),
              2.0 * std::cos(std::numbers::pi / 64), 1e-12);
}

}  // namespace
}  // namespace icmesh
