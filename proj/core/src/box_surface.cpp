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

#include "icmesh/box_surface.hpp"

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "icmesh/error.hpp"

namespace icmesh {

BoxDomain build_box_domain(const AABB& protein_box,
                           const std::array<double, 3>& margins) {
  for (int i = 0; i < 3; ++i) {
    if (!(margins[i] > 0.0) || !std::isfinite(margins[i])) {
      throw Error(ErrorCode::kInvalidMargin,
                  "margin eta" + std::to_string(i + 1) + " = " +
                      std::to_string(margins[i]) + " must be positive");
    }
  }
  return {protein_box.min.x - margins[0], protein_box.max.x + margins[0],
          protein_box.min.y - margins[1], protein_box.max.y + margins[1],
          protein_box.min.z - margins[2], protein_box.max.z + margins[2]};
}

GridFit grid_fit(double length, double h) {
  const long n = std::max(1L, std::lround(length / h));
  return {static_cast<int>(n), length / static_cast<double>(n)};
}

double lattice_coordinate(double lo, double hi, int n, int k) {
  if (k == n) return hi;
  return lo + k * ((hi - lo) / n);
}

std::string_view box_tag_name(BoxSurfaceTag tag) {
  switch (tag) {
    case BoxSurfaceTag::kBottomD: return "BOTTOM_D";
    case BoxSurfaceTag::kTopD: return "TOP_D";
    case BoxSurfaceTag::kLatS1: return "LAT_S1";
    case BoxSurfaceTag::kLatS2: return "LAT_S2";
    case BoxSurfaceTag::kLatM: return "LAT_M";
    case BoxSurfaceTag::kLatS3: return "LAT_S3";
    case BoxSurfaceTag::kLatS4: return "LAT_S4";
  }
  return "UNKNOWN";
}

namespace {

std::vector<double> lattice(double lo, double hi, int n) {
  std::vector<double> out(n + 1);
  for (int k = 0; k <= n; ++k) out[k] = lattice_coordinate(lo, hi, n, k);
  return out;
}

// Vertices are shared between faces by exact coordinates; every coordinate
// comes from the same lattice arrays, so junctions match bit for bit.
class SurfaceBuilder {
 public:
  Index vertex(const Point3& p) {
    const auto [it, inserted] =
        index_.try_emplace({p.x, p.y, p.z}, static_cast<Index>(vertices_.size()));
    if (inserted) vertices_.push_back(p);
    return it->second;
  }

  void triangle(const Point3& a, const Point3& b, const Point3& c,
                const Vec3& outward, BoxSurfaceTag tag) {
    Index ia = vertex(a);
    Index ib = vertex(b);
    Index ic = vertex(c);
    if (dot(cross(b - a, c - a), outward) < 0.0) std::swap(ib, ic);
    triangles_.push_back({ia, ib, ic});
    tags_.push_back(static_cast<int>(tag));
  }

  void quad(const Point3& p00, const Point3& p10, const Point3& p11,
            const Point3& p01, const Vec3& outward, BoxSurfaceTag tag) {
    triangle(p00, p10, p11, outward, tag);
    triangle(p00, p11, p01, outward, tag);
  }

  TriSurfaceMesh finish() {
    return TriSurfaceMesh(std::move(vertices_), std::move(triangles_),
                          std::move(tags_));
  }

 private:
  std::map<std::array<double, 3>, Index> index_;
  std::vector<Point3> vertices_;
  std::vector<Triangle> triangles_;
  std::vector<int> tags_;
};

// One lateral face: points are (s, z) with s running along `axis` and the
// other horizontal coordinate fixed.
struct LateralFace {
  int axis;        // 0: s is x, 1: s is y
  double fixed;    // value of the other horizontal coordinate
  Vec3 outward;
  const std::vector<double>* coarse;
  const std::vector<double>* fine;

  Point3 at(double s, double z) const {
    return axis == 0 ? Point3{s, fixed, z} : Point3{fixed, s, z};
  }
};

void uniform_rows(SurfaceBuilder& out, const LateralFace& face,
                  const std::vector<double>& s, const std::vector<double>& z,
                  std::size_t row_begin, std::size_t row_end,
                  BoxSurfaceTag tag) {
  for (std::size_t k = row_begin; k < row_end; ++k) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      out.quad(face.at(s[i], z[k]), face.at(s[i + 1], z[k]),
               face.at(s[i + 1], z[k + 1]), face.at(s[i], z[k + 1]),
               face.outward, tag);
    }
  }
}

// Joins a row of nodes at height z_lo to a row at z_hi with a different
// spacing by advancing along whichever row has the nearer next node. With
// a 2:1 ratio every coarse cell receives three triangles.
void transition_row(SurfaceBuilder& out, const LateralFace& face,
                    const std::vector<double>& lower, double z_lo,
                    const std::vector<double>& upper, double z_hi,
                    BoxSurfaceTag tag) {
  const double tol = 1e-9 * std::abs(lower.back() - lower.front());
  const std::size_t nb = lower.size() - 1;
  const std::size_t nt = upper.size() - 1;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < nb || j < nt) {
    bool advance_lower;
    if (i == nb) {
      advance_lower = false;
    } else if (j == nt) {
      advance_lower = true;
    } else {
      advance_lower = lower[i + 1] <= upper[j + 1] + tol;
    }
    if (advance_lower) {
      out.triangle(face.at(lower[i], z_lo), face.at(lower[i + 1], z_lo),
                   face.at(upper[j], z_hi), face.outward, tag);
      ++i;
    } else {
      out.triangle(face.at(lower[i], z_lo), face.at(upper[j + 1], z_hi),
                   face.at(upper[j], z_hi), face.outward, tag);
      ++j;
    }
  }
}

}  // namespace

BoxSurface assemble_box_surface(const BoxDomain& box, const MembraneSlab& slab,
                                const MeshSizes& sizes) {
  if (!box.valid()) {
    throw Error(ErrorCode::kInvalidConfig, "box bounds are not increasing");
  }
  if (!(sizes.h_m > 0.0) || !(sizes.h_s >= sizes.h_m)) {
    throw Error(ErrorCode::kInvalidConfig,
                "mesh sizes need 0 < h_m <= h_s (h_m = " +
                    std::to_string(sizes.h_m) +
                    ", h_s = " + std::to_string(sizes.h_s) + ")");
  }
  if (!slab.valid()) {
    throw Error(ErrorCode::kInvalidConfig, "membrane slab needs z1 < z2");
  }
  if (slab.z1 - box.lz1 < sizes.h_s || box.lz2 - slab.z2 < sizes.h_s) {
    throw Error(ErrorCode::kSlabTooClose,
                "need at least one h_s = " + std::to_string(sizes.h_s) +
                    " row between the slab [" + std::to_string(slab.z1) +
                    ", " + std::to_string(slab.z2) + "] and the box ends [" +
                    std::to_string(box.lz1) + ", " + std::to_string(box.lz2) +
                    "]");
  }

  BoxSurface result;
  result.fine_x = grid_fit(box.length_x(), sizes.h_m);
  result.fine_y = grid_fit(box.length_y(), sizes.h_m);
  result.coarse_x = grid_fit(box.length_x(), sizes.h_s);
  result.coarse_y = grid_fit(box.length_y(), sizes.h_s);
  result.below = grid_fit(slab.z1 - box.lz1, sizes.h_s);
  result.membrane = grid_fit(slab.z2 - slab.z1, sizes.h_m);
  result.above = grid_fit(box.lz2 - slab.z2, sizes.h_s);

  const auto xf = lattice(box.lx1, box.lx2, result.fine_x.n);
  const auto yf = lattice(box.ly1, box.ly2, result.fine_y.n);
  const auto xc = lattice(box.lx1, box.lx2, result.coarse_x.n);
  const auto yc = lattice(box.ly1, box.ly2, result.coarse_y.n);
  const auto zb = lattice(box.lz1, slab.z1, result.below.n);
  const auto zm = lattice(slab.z1, slab.z2, result.membrane.n);
  const auto zt = lattice(slab.z2, box.lz2, result.above.n);

  SurfaceBuilder out;

  // Top and bottom faces on the coarse lattice, matching the lateral
  // faces' first and last coarse rows.
  for (std::size_t j = 0; j + 1 < yc.size(); ++j) {
    for (std::size_t i = 0; i + 1 < xc.size(); ++i) {
      out.quad({xc[i], yc[j], box.lz1}, {xc[i + 1], yc[j], box.lz1},
               {xc[i + 1], yc[j + 1], box.lz1}, {xc[i], yc[j + 1], box.lz1},
               {0, 0, -1}, BoxSurfaceTag::kBottomD);
    }
  }
  for (std::size_t j = 0; j + 1 < yc.size(); ++j) {
    for (std::size_t i = 0; i + 1 < xc.size(); ++i) {
      out.quad({xc[i], yc[j], box.lz2}, {xc[i + 1], yc[j], box.lz2},
               {xc[i + 1], yc[j + 1], box.lz2}, {xc[i], yc[j + 1], box.lz2},
               {0, 0, 1}, BoxSurfaceTag::kTopD);
    }
  }

  const LateralFace faces[4] = {
      {0, box.ly1, {0, -1, 0}, &xc, &xf},
      {1, box.lx2, {1, 0, 0}, &yc, &yf},
      {0, box.ly2, {0, 1, 0}, &xc, &xf},
      {1, box.lx1, {-1, 0, 0}, &yc, &yf},
  };
  for (const LateralFace& face : faces) {
    const auto& coarse = *face.coarse;
    const auto& fine = *face.fine;
    uniform_rows(out, face, coarse, zb, 0, zb.size() - 2,
                 BoxSurfaceTag::kLatS1);
    transition_row(out, face, coarse, zb[zb.size() - 2], fine, slab.z1,
                   BoxSurfaceTag::kLatS2);
    uniform_rows(out, face, fine, zm, 0, zm.size() - 1, BoxSurfaceTag::kLatM);
    transition_row(out, face, fine, slab.z2, coarse, zt[1],
                   BoxSurfaceTag::kLatS3);
    uniform_rows(out, face, coarse, zt, 1, zt.size() - 1,
                 BoxSurfaceTag::kLatS4);
  }

  result.surface = out.finish();
  return result;
}

}  // namespace icmesh
