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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "icmesh/geometry.hpp"
#include "icmesh/region_extraction.hpp"
#include "icmesh/surface_mesh.hpp"
#include "icmesh/tet_mesh.hpp"

namespace icmesh {

enum class SurfaceFormat { kOff, kPly };

// Format from the file extension (.off / .ply); nullopt otherwise.
std::optional<SurfaceFormat> surface_format_from_path(
    const std::filesystem::path& path);
std::optional<SurfaceFormat> parse_surface_format(std::string_view name);

// Reads OFF or ASCII PLY. Parse errors carry the 1-based line number; an
// edge shared by more than two triangles raises kNonManifoldEdge.
TriSurfaceMesh read_surface(const std::filesystem::path& path,
                            SurfaceFormat format);
TriSurfaceMesh read_surface(std::istream& in, SurfaceFormat format,
                            std::string_view source = "<stream>");

void write_surface(const TriSurfaceMesh& surface,
                   const std::filesystem::path& path, SurfaceFormat format);
void write_off(const TriSurfaceMesh& surface, std::ostream& out);
void write_ply(const TriSurfaceMesh& surface, std::ostream& out);

// "%.12g"
std::string format_real(double value);

// TetGen boundary markers.
inline constexpr int kProteinFacetMarker = 1;
inline constexpr int kBoxFacetMarker = 2;

struct PlcFacet {
  Triangle corners;
  int marker = 0;
};

struct RegionSeed {
  Point3 point;
  int attribute = 0;
  std::optional<double> max_volume;
};

// Input to the tetrahedralizer: surface vertices plus isolated membrane
// points, marked facets, and one seed per region.
struct PlcDocument {
  std::vector<Point3> vertices;
  std::vector<PlcFacet> facets;
  std::vector<RegionSeed> seeds;
};

// TetGen 1.5 .poly, 1-based. Throws kIndexOutOfRange for a facet that
// references a missing node.
void write_plc(const PlcDocument& doc, const std::filesystem::path& path);
void write_plc(const PlcDocument& doc, std::ostream& out);

// Reads a TetGen .node/.ele pair. Index base (0 or 1) is taken from the
// smallest node index; the first .ele attribute column becomes the label.
TetMesh read_tet_mesh(const std::filesystem::path& node_path,
                      const std::filesystem::path& ele_path);
TetMesh read_tet_mesh(std::istream& node_in, std::istream& ele_in,
                      std::string_view source = "<stream>");

// Writes <base>.node and <base>.ele (1-based, one attribute column).
void write_tet_mesh(const TetMesh& mesh, const std::filesystem::path& base);
void write_node(const TetMesh& mesh, std::ostream& out);
void write_ele(const TetMesh& mesh, std::ostream& out);

// Legacy ASCII VTK unstructured grid with an int cell array "region".
// Throws kEmptyMesh for a mesh without tets.
void write_vtk(const TetMesh& mesh, const std::filesystem::path& path);
void write_vtk(const TetMesh& mesh, std::ostream& out);

// Stable key order.
std::string report_to_json(const ExtractionReport& report, int indent = 2);
void write_report(const ExtractionReport& report,
                  const std::filesystem::path& path);

}  // namespace icmesh
