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

#include <cmath>

#include "error_code.hpp"
#include "icmesh/error.hpp"
#include "icmesh/geometry.hpp"
#include "icmesh/surface_mesh.hpp"
#include "icmesh/synth.hpp"
#include "icmesh/tet_mesh.hpp"
#include "oracles.hpp"

namespace icmesh {
namespace {

using testing::unit_cube;

using testing::code_of;

TEST(Aabb, SingleTriangle) {
  const TriSurfaceMesh tri({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 2}});
  const AABB box = compute_aabb(tri);
  EXPECT_EQ(box.min, (Point3{0, 0, 0}));
  EXPECT_EQ(box.max, (Point3{1, 1, 0}));
}

TEST(Aabb, EmptySurfaceIsRejected) {
  EXPECT_EQ(code_of([] { compute_aabb(TriSurfaceMesh{}); }),
            ErrorCode::kEmptyMesh);
}

TEST(Aabb, TubeBoundsAreExact) {
  const TriSurfaceMesh tube = synth::make_tube({});
  // Brute-force scan of the generated vertices.
  Point3 lo = tube.vertices()[0], hi = lo;
  for (const Point3& p : tube.vertices()) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  const AABB box = compute_aabb(tube);
  EXPECT_EQ(box.min, lo);
  EXPECT_EQ(box.max, hi);
  EXPECT_EQ(box.max.x, 5.0);
  EXPECT_EQ(box.min.z, -15.0);
  EXPECT_EQ(box.max.z, 15.0);
  EXPECT_NEAR(box.min.x, -5.0, 1e-12);
  EXPECT_NEAR(box.max.y, 5.0, 1e-3);  // 64-gon: vertex 16 sits at 90 degrees
}

TEST(Epsilon, ScalesWithDiagonal) {
  EXPECT_DOUBLE_EQ(geometric_epsilon({{0, 0, 0}, {3, 4, 0}}), 5e-9);
  EXPECT_DOUBLE_EQ(geometric_epsilon({{1, 1, 1}, {1, 1, 1}}), 1e-9);
}

TEST(TriSurfaceMesh, RejectsRepeatedVertex) {
  EXPECT_EQ(code_of([] {
              TriSurfaceMesh({{2, 3, 4}, {2, 3, 4}, {0, 0, 0}}, {{0, 0, 1}});
            }),
            ErrorCode::kInvalidMesh);
}

TEST(TriSurfaceMesh, RejectsOutOfRangeIndex) {
  EXPECT_EQ(code_of([] {
              TriSurfaceMesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 3}});
            }),
            ErrorCode::kIndexOutOfRange);
}

TEST(TriSurfaceMesh, RejectsNonFiniteAndZeroArea) {
  const double nan = std::nan("");
  EXPECT_EQ(code_of([&] {
              TriSurfaceMesh({{nan, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 2}});
            }),
            ErrorCode::kInvalidMesh);
  EXPECT_EQ(code_of([] {
              TriSurfaceMesh({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}, {{0, 1, 2}});
            }),
            ErrorCode::kInvalidMesh);
}

TEST(TriSurfaceMesh, CubeIsWatertightWithEulerTwo) {
  const TriSurfaceMesh cube = unit_cube();
  EXPECT_TRUE(cube.watertight());
  EXPECT_TRUE(cube.closed());
  EXPECT_EQ(cube.euler_characteristic(), 2);
  EXPECT_EQ(testing::euler_by_map(cube), 2);
  EXPECT_EQ(cube.edge_census().edges, 18u);
  EXPECT_EQ(cube.edge_census().boundary_edges, 0u);
}

TEST(TriSurfaceMesh, SingleTriangleIsOpen) {
  const TriSurfaceMesh tri({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 2}});
  EXPECT_FALSE(tri.watertight());
  EXPECT_FALSE(tri.closed());
  EXPECT_EQ(tri.edge_census().boundary_edges, 3u);
}

TEST(TriSurfaceMesh, FlippedTriangleBreaksWatertightness) {
  TriSurfaceMesh cube = unit_cube();
  auto tris = cube.triangles();
  std::swap(tris[0][1], tris[0][2]);
  const TriSurfaceMesh bad(cube.vertices(), tris);
  EXPECT_FALSE(bad.watertight());
  EXPECT_GT(bad.edge_census().unbalanced_edges, 0u);
}

TEST(TriSurfaceMesh, TagCountMustMatch) {
  EXPECT_EQ(code_of([] {
              TriSurfaceMesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 2}},
                             {1, 2});
            }),
            ErrorCode::kInvalidMesh);
}

TEST(EnclosedVolume, UnitCubeAndTetrahedron) {
  EXPECT_NEAR(enclosed_volume(unit_cube()), 1.0, 1e-15);
  const TriSurfaceMesh tet({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                           {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}});
  EXPECT_TRUE(tet.watertight());
  EXPECT_NEAR(enclosed_volume(tet), 1.0 / 6.0, 1e-15);
}

TEST(EnclosedVolume, OpenSurfaceIsRejected) {
  const TriSurfaceMesh tri({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 2}});
  EXPECT_EQ(code_of([&] { enclosed_volume(tri); }), ErrorCode::kNotWatertight);
}

TEST(EnclosedVolume, TubeMatchesAnalyticPrism) {
  const TriSurfaceMesh tube = synth::make_tube({});
  const double expected =
      (synth::polygon_area(64, 5.0) - synth::polygon_area(64, 2.0)) * 30.0;
  EXPECT_NEAR(enclosed_volume(tube), expected, 1e-9 * expected);
  // Independent formula about the origin and shoelace areas.
  const double shoelace = testing::shoelace_area(testing::regular_polygon(64, 5)) -
                          testing::shoelace_area(testing::regular_polygon(64, 2));
  EXPECT_NEAR(testing::signed_volume_origin(tube), shoelace * 30.0,
              1e-9 * expected);
}

TEST(EnclosedVolume, TranslationInvariant) {
  const TriSurfaceMesh far = testing::box_surface({1e4, 1e4, 1e4},
                                                  {1e4 + 2, 1e4 + 3, 1e4 + 4});
  EXPECT_NEAR(enclosed_volume(far), 24.0, 1e-8);
}

TEST(SurfaceArea, Cube) {
  EXPECT_NEAR(surface_area(unit_cube()), 6.0, 1e-14);
}

TEST(TetMesh, CanonicalizesNegativeOrientation) {
  const TetMesh mesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                     {{0, 2, 1, 3}}, {RegionLabel::kSolvent});
  const Tet& t = mesh.tets()[0];
  EXPECT_GT(orient3d(mesh.vertices()[t[0]], mesh.vertices()[t[1]],
                     mesh.vertices()[t[2]], mesh.vertices()[t[3]]),
            0.0);
  EXPECT_NEAR(mesh.volume(0), 1.0 / 6.0, 1e-15);
  EXPECT_EQ(mesh.centroid(0), (Point3{0.25, 0.25, 0.25}));
}

TEST(TetMesh, RejectsDegenerateAndBadLabels) {
  EXPECT_EQ(code_of([] {
              TetMesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}},
                      {{0, 1, 2, 3}}, {RegionLabel::kSolvent});
            }),
            ErrorCode::kInvalidMesh);
  EXPECT_EQ(code_of([] {
              TetMesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                      {{0, 1, 2, 3}}, {static_cast<RegionLabel>(7)});
            }),
            ErrorCode::kInvalidMesh);
  EXPECT_EQ(code_of([] {
              TetMesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                      {{0, 1, 2, 4}}, {RegionLabel::kSolvent});
            }),
            ErrorCode::kIndexOutOfRange);
}

TEST(TetMesh, FaceTableIsOutward) {
  const TetMesh mesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                     {{0, 1, 2, 3}}, {RegionLabel::kProtein});
  const auto c = mesh.corners(0);
  const Point3 centroid = mesh.centroid(0);
  for (int f = 0; f < 4; ++f) {
    const auto& fv = kTetFaces[f];
    const Vec3 n = cross(c[fv[1]] - c[fv[0]], c[fv[2]] - c[fv[0]]);
    EXPECT_GT(dot(n, c[fv[0]] - centroid), 0.0) << "face " << f;
  }
}

}  // namespace
}  // namespace icmesh
