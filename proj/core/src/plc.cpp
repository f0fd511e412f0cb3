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

#include "icmesh/plc.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "icmesh/error.hpp"
#include "icmesh/inclusion.hpp"

namespace icmesh {
namespace {

// Ray parity first; the winding number settles degenerate queries.
bool inside(const ClosedSurfaceTester& tester, const Point3& p) {
  try {
    return tester.contains(p);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDegenerateQuery) throw;
  }
  try {
    return winding_number_inclusion(p, tester.surface());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kOnBoundary) throw;
    return false;
  }
}

}  // namespace

std::string tetgen_switches(bool verbose) {
  std::string s(kTetgenSwitches);
  if (verbose) s.erase(std::remove(s.begin(), s.end(), 'Q'), s.end());
  return s;
}

Point3 protein_seed(const TriSurfaceMesh& protein) {
  const ClosedSurfaceTester tester(protein);
  if (protein.empty()) throw Error(ErrorCode::kEmptyMesh, "empty protein");

  std::size_t best = 0;
  double best_area = -1.0;
  for (std::size_t t = 0; t < protein.triangle_count(); ++t) {
    const auto c = protein.corners(t);
    const double area = triangle_area(c[0], c[1], c[2]);
    if (area > best_area) {
      best_area = area;
      best = t;
    }
  }
  const auto c = protein.corners(best);
  const Point3 centroid = (c[0] + c[1] + c[2]) * (1.0 / 3.0);
  Vec3 inward = -cross(c[1] - c[0], c[2] - c[0]);
  inward = inward * (1.0 / norm(inward));
  if (enclosed_volume(protein) < 0.0) inward = -inward;

  double step = 2.0 * protein.epsilon();
  for (int attempt = 0; attempt <= 8; ++attempt, step *= 2.0) {
    const Point3 p = centroid + inward * step;
    if (inside(tester, p)) return p;
  }
  throw Error(ErrorCode::kDegenerateQuery,
              "could not place a seed strictly inside the protein");
}

Point3 solvent_seed(const BoxDomain& box, const TriSurfaceMesh& protein) {
  const ClosedSurfaceTester tester(protein);
  const double d = 1e-3 * std::min({box.length_x(), box.length_y(),
                                    box.length_z()});
  for (double z : {box.lz1 + d, box.lz2 - d}) {
    for (double y : {box.ly1 + d, box.ly2 - d}) {
      for (double x : {box.lx1 + d, box.lx2 - d}) {
        const Point3 p{x, y, z};
        if (!inside(tester, p)) return p;
      }
    }
  }
  throw Error(ErrorCode::kInvalidConfig,
              "every box corner lies inside the protein");
}

PlcDocument assemble_plc(const TriSurfaceMesh& protein,
                         const TriSurfaceMesh& box_surface,
                         const BoxDomain& box,
                         const std::vector<Point3>& membrane_points) {
  if (!protein.closed()) {
    throw Error(ErrorCode::kNotWatertight, "protein surface is not closed");
  }
  if (!box_surface.watertight()) {
    throw Error(ErrorCode::kNotWatertight, "box surface is not watertight");
  }
  PlcDocument doc;
  doc.vertices = protein.vertices();
  const Index box_offset = static_cast<Index>(doc.vertices.size());
  doc.vertices.insert(doc.vertices.end(), box_surface.vertices().begin(),
                      box_surface.vertices().end());

  for (const Triangle& t : protein.triangles()) {
    doc.facets.push_back({t, kProteinFacetMarker});
  }
  for (const Triangle& t : box_surface.triangles()) {
    doc.facets.push_back({{t[0] + box_offset, t[1] + box_offset,
                           t[2] + box_offset},
                          kBoxFacetMarker});
  }

  std::map<std::tuple<double, double, double>, Index> box_nodes;
  for (std::size_t i = 0; i < box_surface.vertex_count(); ++i) {
    const Point3& p = box_surface.vertices()[i];
    box_nodes.emplace(std::tuple{p.x, p.y, p.z}, box_offset + i);
  }
  for (const Point3& p : membrane_points) {
    if (!box_nodes.count(std::tuple{p.x, p.y, p.z})) {
      doc.vertices.push_back(p);
    }
  }

  doc.seeds.push_back({protein_seed(protein), 1, std::nullopt});
  doc.seeds.push_back({solvent_seed(box, protein), 2, std::nullopt});
  return doc;
}

}  // namespace icmesh
