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

#include "icmesh/mesh_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "icmesh/error.hpp"

namespace icmesh {
namespace {

// Non-empty, comment-stripped lines split on whitespace.
class TokenLines {
 public:
  TokenLines(std::istream& in, std::string_view source)
      : in_(in), source_(source) {}

  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (const auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      tokens.clear();
      std::istringstream ss(line);
      std::string tok;
      while (ss >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  // Raw line (no comment stripping), for PLY headers.
  bool next_raw(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }

  std::vector<std::string> require(std::string_view what) {
    std::vector<std::string> tokens;
    if (!next(tokens)) fail("unexpected end of file, expected " +
                            std::string(what));
    return tokens;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::kParseError, std::string(source_) + ":" +
                                            std::to_string(line_no_) + ": " +
                                            message);
  }

  long line() const { return line_no_; }

 private:
  std::istream& in_;
  std::string_view source_;
  long line_no_ = 0;
};

double to_real(const TokenLines& lines, const std::string& tok) {
  double value = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    lines.fail("expected a number, got '" + tok + "'");
  }
  return value;
}

long long to_integer(const TokenLines& lines, const std::string& tok) {
  long long value = 0;
  const auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    lines.fail("expected an integer, got '" + tok + "'");
  }
  return value;
}

std::size_t to_count(const TokenLines& lines, const std::string& tok) {
  const long long v = to_integer(lines, tok);
  if (v < 0) lines.fail("negative count " + tok);
  return static_cast<std::size_t>(v);
}

Index to_index(const TokenLines& lines, const std::string& tok,
               std::size_t vertex_count) {
  const long long v = to_integer(lines, tok);
  if (v < 0 || static_cast<std::size_t>(v) >= vertex_count) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "line " + std::to_string(lines.line()) + ": vertex index " +
                    tok + " outside [0, " + std::to_string(vertex_count) +
                    ")");
  }
  return static_cast<Index>(v);
}

TriSurfaceMesh finish_surface(std::vector<Point3> vertices,
                              std::vector<Triangle> triangles,
                              std::string_view source) {
  TriSurfaceMesh mesh;
  try {
    mesh = TriSurfaceMesh(std::move(vertices), std::move(triangles));
  } catch (const Error& e) {
    throw Error(e.code(), std::string(source) + ": " + e.detail());
  }
  if (mesh.edge_census().non_manifold_edges > 0) {
    throw Error(ErrorCode::kNonManifoldEdge,
                std::string(source) + ": " +
                    std::to_string(mesh.edge_census().non_manifold_edges) +
                    " edges are shared by more than two triangles");
  }
  return mesh;
}

TriSurfaceMesh read_off(std::istream& in, std::string_view source) {
  TokenLines lines(in, source);
  std::vector<std::string> tok = lines.require("OFF header");
  if (tok[0] != "OFF") lines.fail("missing OFF header");
  tok.erase(tok.begin());
  if (tok.empty()) tok = lines.require("vertex and face counts");
  if (tok.size() < 2) lines.fail("expected vertex and face counts");
  const std::size_t nv = to_count(lines, tok[0]);
  const std::size_t nf = to_count(lines, tok[1]);

  std::vector<Point3> vertices;
  vertices.reserve(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    tok = lines.require("vertex");
    if (tok.size() < 3) lines.fail("vertex needs 3 coordinates");
    vertices.push_back({to_real(lines, tok[0]), to_real(lines, tok[1]),
                        to_real(lines, tok[2])});
  }
  std::vector<Triangle> triangles;
  triangles.reserve(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    tok = lines.require("face");
    if (to_integer(lines, tok[0]) != 3) {
      lines.fail("only triangular faces are supported");
    }
    if (tok.size() < 4) lines.fail("face needs 3 vertex indices");
    triangles.push_back({to_index(lines, tok[1], nv),
                         to_index(lines, tok[2], nv),
                         to_index(lines, tok[3], nv)});
  }
  return finish_surface(std::move(vertices), std::move(triangles), source);
}

struct PlyElement {
  std::string name;
  std::size_t count = 0;
  std::vector<std::string> properties;
  bool has_list = false;
};

TriSurfaceMesh read_ply(std::istream& in, std::string_view source) {
  TokenLines lines(in, source);
  std::string raw;
  if (!lines.next_raw(raw) || raw != "ply") lines.fail("missing ply magic");
  std::vector<PlyElement> elements;
  bool ascii = false;
  for (;;) {
    if (!lines.next_raw(raw)) lines.fail("unterminated PLY header");
    std::istringstream ss(raw);
    std::string key;
    ss >> key;
    if (key == "end_header") break;
    if (key == "comment" || key == "obj_info" || key.empty()) continue;
    if (key == "format") {
      std::string kind;
      ss >> kind;
      if (kind != "ascii") lines.fail("only ASCII PLY is supported");
      ascii = true;
    } else if (key == "element") {
      PlyElement e;
      std::string count;
      ss >> e.name >> count;
      e.count = to_count(lines, count);
      elements.push_back(e);
    } else if (key == "property") {
      if (elements.empty()) lines.fail("property before any element");
      std::string type;
      ss >> type;
      std::string name;
      if (type == "list") {
        std::string count_type, item_type;
        ss >> count_type >> item_type >> name;
        elements.back().has_list = true;
      } else {
        ss >> name;
      }
      elements.back().properties.push_back(name);
    } else {
      lines.fail("unknown header keyword '" + key + "'");
    }
  }
  if (!ascii) lines.fail("missing format line");

  std::vector<Point3> vertices;
  std::vector<Triangle> triangles;
  bool saw_vertex = false;
  std::vector<std::string> tok;
  for (const PlyElement& e : elements) {
    if (e.name == "vertex") {
      saw_vertex = true;
      int ix = -1, iy = -1, iz = -1;
      for (int p = 0; p < static_cast<int>(e.properties.size()); ++p) {
        if (e.properties[p] == "x") ix = p;
        if (e.properties[p] == "y") iy = p;
        if (e.properties[p] == "z") iz = p;
      }
      if (ix < 0 || iy < 0 || iz < 0 || e.has_list) {
        lines.fail("vertex element needs scalar x, y, z properties");
      }
      vertices.reserve(e.count);
      for (std::size_t i = 0; i < e.count; ++i) {
        tok = lines.require("vertex");
        if (tok.size() < e.properties.size()) lines.fail("short vertex line");
        vertices.push_back({to_real(lines, tok[ix]), to_real(lines, tok[iy]),
                            to_real(lines, tok[iz])});
      }
    } else if (e.name == "face") {
      if (!saw_vertex) lines.fail("face element before vertex element");
      if (e.properties.size() != 1 || !e.has_list) {
        lines.fail("face element needs exactly one list property");
      }
      triangles.reserve(e.count);
      for (std::size_t f = 0; f < e.count; ++f) {
        tok = lines.require("face");
        if (to_integer(lines, tok[0]) != 3 || tok.size() != 4) {
          lines.fail("only triangular faces are supported");
        }
        triangles.push_back({to_index(lines, tok[1], vertices.size()),
                             to_index(lines, tok[2], vertices.size()),
                             to_index(lines, tok[3], vertices.size())});
      }
    } else {
      for (std::size_t i = 0; i < e.count; ++i) lines.require(e.name);
    }
  }
  return finish_surface(std::move(vertices), std::move(triangles), source);
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  }
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  }
  return out;
}

void check_written(std::ostream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path.string());
}

std::string point_line(const Point3& p) {
  return format_real(p.x) + " " + format_real(p.y) + " " + format_real(p.z);
}

std::vector<std::vector<std::string>> read_table(TokenLines& lines,
                                                 std::size_t rows,
                                                 std::string_view what) {
  std::vector<std::vector<std::string>> table(rows);
  for (auto& row : table) row = lines.require(what);
  return table;
}

}  // namespace

std::string format_real(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::optional<SurfaceFormat> parse_surface_format(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "off") return SurfaceFormat::kOff;
  if (lower == "ply") return SurfaceFormat::kPly;
  return std::nullopt;
}

std::optional<SurfaceFormat> surface_format_from_path(
    const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  if (ext.empty()) return std::nullopt;
  return parse_surface_format(std::string_view(ext).substr(1));
}

TriSurfaceMesh read_surface(std::istream& in, SurfaceFormat format,
                            std::string_view source) {
  return format == SurfaceFormat::kOff ? read_off(in, source)
                                       : read_ply(in, source);
}

TriSurfaceMesh read_surface(const std::filesystem::path& path,
                            SurfaceFormat format) {
  std::ifstream in = open_in(path);
  const std::string source = path.string();
  return read_surface(in, format, source);
}

void write_off(const TriSurfaceMesh& surface, std::ostream& out) {
  out << "OFF\n"
      << surface.vertex_count() << ' ' << surface.triangle_count() << " 0\n";
  for (const Point3& p : surface.vertices()) out << point_line(p) << '\n';
  for (const Triangle& t : surface.triangles()) {
    out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  }
}

void write_ply(const TriSurfaceMesh& surface, std::ostream& out) {
  out << "ply\nformat ascii 1.0\n"
      << "element vertex " << surface.vertex_count() << '\n'
      << "property double x\nproperty double y\nproperty double z\n"
      << "element face " << surface.triangle_count() << '\n'
      << "property list uchar int vertex_indices\nend_header\n";
  for (const Point3& p : surface.vertices()) out << point_line(p) << '\n';
  for (const Triangle& t : surface.triangles()) {
    out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  }
}

void write_surface(const TriSurfaceMesh& surface,
                   const std::filesystem::path& path, SurfaceFormat format) {
  std::ofstream out = open_out(path);
  if (format == SurfaceFormat::kOff) {
    write_off(surface, out);
  } else {
    write_ply(surface, out);
  }
  check_written(out, path);
}

void write_plc(const PlcDocument& doc, std::ostream& out) {
  const std::size_t n = doc.vertices.size();
  for (std::size_t f = 0; f < doc.facets.size(); ++f) {
    for (Index v : doc.facets[f].corners) {
      if (v >= n) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "facet " + std::to_string(f) + " references node " +
                        std::to_string(v) + " of " + std::to_string(n));
      }
    }
  }
  out << "# Part 1 - node list\n" << n << " 3 0 0\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << i + 1 << ' ' << point_line(doc.vertices[i]) << '\n';
  }
  out << "# Part 2 - facet list\n" << doc.facets.size() << " 1\n";
  for (const PlcFacet& f : doc.facets) {
    out << "1 0 " << f.marker << '\n'
        << "3 " << f.corners[0] + 1 << ' ' << f.corners[1] + 1 << ' '
        << f.corners[2] + 1 << '\n';
  }
  out << "# Part 3 - hole list\n0\n";
  out << "# Part 4 - region list\n" << doc.seeds.size() << '\n';
  for (std::size_t i = 0; i < doc.seeds.size(); ++i) {
    const RegionSeed& s = doc.seeds[i];
    out << i + 1 << ' ' << point_line(s.point) << ' ' << s.attribute << ' '
        << (s.max_volume ? format_real(*s.max_volume) : std::string("-1"))
        << '\n';
  }
}

void write_plc(const PlcDocument& doc, const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  write_plc(doc, out);
  check_written(out, path);
}

TetMesh read_tet_mesh(std::istream& node_in, std::istream& ele_in,
                      std::string_view source) {
  const std::string node_src = std::string(source) + ".node";
  const std::string ele_src = std::string(source) + ".ele";

  TokenLines nodes(node_in, node_src);
  std::vector<std::string> tok = nodes.require(".node header");
  const std::size_t nv = to_count(nodes, tok[0]);
  if (tok.size() > 1 && to_integer(nodes, tok[1]) != 3) {
    nodes.fail("only 3D node files are supported");
  }
  const auto node_rows = read_table(nodes, nv, "node");
  long long base = nv == 0 ? 0 : std::numeric_limits<long long>::max();
  for (const auto& row : node_rows) {
    if (row.size() < 4) nodes.fail("node needs an index and 3 coordinates");
    base = std::min(base, to_integer(nodes, row[0]));
  }
  if (base != 0 && base != 1) {
    nodes.fail("node indices must start at 0 or 1, found " +
               std::to_string(base));
  }
  std::vector<Point3> vertices(nv);
  std::vector<std::uint8_t> seen(nv, 0);
  for (const auto& row : node_rows) {
    const long long id = to_integer(nodes, row[0]) - base;
    if (id < 0 || static_cast<std::size_t>(id) >= nv || seen[id]) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  node_src + ": node index " + row[0] +
                      " is duplicated or out of range");
    }
    seen[id] = 1;
    vertices[id] = {to_real(nodes, row[1]), to_real(nodes, row[2]),
                    to_real(nodes, row[3])};
  }

  TokenLines eles(ele_in, ele_src);
  tok = eles.require(".ele header");
  if (tok.size() < 2) eles.fail("header needs count and nodes per tet");
  const std::size_t nt = to_count(eles, tok[0]);
  if (to_integer(eles, tok[1]) != 4) {
    eles.fail("only linear tetrahedra are supported");
  }
  const long long attrs = tok.size() > 2 ? to_integer(eles, tok[2]) : 0;
  if (attrs < 1) {
    throw Error(ErrorCode::kMissingRegionAttribute,
                ele_src + ": no region attribute column");
  }
  std::vector<Tet> tets;
  std::vector<RegionLabel> labels;
  tets.reserve(nt);
  labels.reserve(nt);
  for (std::size_t t = 0; t < nt; ++t) {
    tok = eles.require("tetrahedron");
    if (tok.size() < 6) eles.fail("tetrahedron needs 4 nodes and a region");
    Tet tet{};
    for (int k = 0; k < 4; ++k) {
      const long long v = to_integer(eles, tok[1 + k]) - base;
      if (v < 0 || static_cast<std::size_t>(v) >= nv) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    ele_src + ":" + std::to_string(eles.line()) + ": node " +
                        tok[1 + k] + " out of range");
      }
      tet[k] = static_cast<Index>(v);
    }
    const double attr = to_real(eles, tok[5]);
    const long label = std::lround(attr);
    if (label < 0 || label > 3 || static_cast<double>(label) != attr) {
      eles.fail("region attribute " + tok[5] + " is not a label in 0..3");
    }
    tets.push_back(tet);
    labels.push_back(static_cast<RegionLabel>(label));
  }
  return TetMesh(std::move(vertices), std::move(tets), std::move(labels));
}

TetMesh read_tet_mesh(const std::filesystem::path& node_path,
                      const std::filesystem::path& ele_path) {
  std::ifstream node_in = open_in(node_path);
  std::ifstream ele_in = open_in(ele_path);
  std::filesystem::path base = node_path;
  base.replace_extension();
  return read_tet_mesh(node_in, ele_in, base.string());
}

void write_node(const TetMesh& mesh, std::ostream& out) {
  out << mesh.vertex_count() << " 3 0 0\n";
  for (std::size_t i = 0; i < mesh.vertex_count(); ++i) {
    out << i + 1 << ' ' << point_line(mesh.vertices()[i]) << '\n';
  }
}

void write_ele(const TetMesh& mesh, std::ostream& out) {
  out << mesh.tet_count() << " 4 1\n";
  for (std::size_t t = 0; t < mesh.tet_count(); ++t) {
    const Tet& tet = mesh.tets()[t];
    out << t + 1 << ' ' << tet[0] + 1 << ' ' << tet[1] + 1 << ' '
        << tet[2] + 1 << ' ' << tet[3] + 1 << ' '
        << static_cast<int>(mesh.label(t)) << '\n';
  }
}

void write_tet_mesh(const TetMesh& mesh, const std::filesystem::path& base) {
  const std::filesystem::path node_path = base.string() + ".node";
  const std::filesystem::path ele_path = base.string() + ".ele";
  std::ofstream node_out = open_out(node_path);
  write_node(mesh, node_out);
  check_written(node_out, node_path);
  std::ofstream ele_out = open_out(ele_path);
  write_ele(mesh, ele_out);
  check_written(ele_out, ele_path);
}

void write_vtk(const TetMesh& mesh, std::ostream& out) {
  if (mesh.empty()) {
    throw Error(ErrorCode::kEmptyMesh, "cannot write a VTK file without tets");
  }
  const std::size_t nt = mesh.tet_count();
  out << "# vtk DataFile Version 3.0\n"
      << "icmesh tetrahedral mesh\n"
      << "ASCII\n"
      << "DATASET UNSTRUCTURED_GRID\n"
      << "POINTS " << mesh.vertex_count() << " double\n";
  for (const Point3& p : mesh.vertices()) out << point_line(p) << '\n';
  out << "CELLS " << nt << ' ' << 5 * nt << '\n';
  for (const Tet& tet : mesh.tets()) {
    out << "4 " << tet[0] << ' ' << tet[1] << ' ' << tet[2] << ' ' << tet[3]
        << '\n';
  }
  out << "CELL_TYPES " << nt << '\n';
  for (std::size_t t = 0; t < nt; ++t) out << "10\n";
  out << "CELL_DATA " << nt << '\n'
      << "SCALARS region int 1\n"
      << "LOOKUP_TABLE default\n";
  for (std::size_t t = 0; t < nt; ++t) {
    out << static_cast<int>(mesh.label(t)) << '\n';
  }
}

void write_vtk(const TetMesh& mesh, const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  write_vtk(mesh, out);
  check_written(out, path);
}

std::string report_to_json(const ExtractionReport& report, int indent) {
  using nlohmann::ordered_json;
  const auto count = [](const SubmeshCount& c) {
    ordered_json j;
    j["vertices"] = c.vertices;
    j["tets"] = c.tets;
    return j;
  };
  ordered_json doc;
  doc["expanded_solvent"] = count(report.expanded_solvent);
  doc["pore_solvent"] = count(report.pore_solvent);
  doc["full"] = count(report.full);
  doc["solvent"] = count(report.solvent);
  doc["membrane"] = count(report.membrane);
  doc["protein"] = count(report.protein);

  ordered_json band;
  band["rect"] = {{"a", report.rect.a},
                  {"b", report.rect.b},
                  {"c", report.rect.c},
                  {"d", report.rect.d},
                  {"tau", report.rect.tau}};
  band["band_tets"] = report.band_tets;
  band["dms_tets"] = report.dms_tets;
  band["dmo_tets"] = report.dmo_tets;
  band["s_s"] = report.s_s;
  band["s_m"] = report.s_m;
  band["isolated_pockets"] = report.isolated_band_pockets;
  band["classification_disagreements"] = report.classification_disagreements;
  doc["band"] = band;

  ordered_json components;
  components["boundary_components"] = report.component_count;
  components["pores"] = report.pore_component_count;
  components["pore_volumes"] = report.pore_volumes;
  doc["components"] = components;

  doc["volumes"] = {{"protein", report.protein_volume},
                    {"solvent", report.solvent_volume},
                    {"membrane", report.membrane_volume}};
  doc["warnings"] = report.warnings;
  ordered_json timings = ordered_json::object();
  for (const StepTiming& t : report.timings) timings[t.name] = t.seconds;
  doc["timings"] = timings;
  return doc.dump(indent);
}

void write_report(const ExtractionReport& report,
                  const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  out << report_to_json(report) << '\n';
  check_written(out, path);
}

}  // namespace icmesh
