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

#include "icmesh/region_extraction.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>

#include "icmesh/cross_section.hpp"
#include "icmesh/error.hpp"
#include "icmesh/inclusion.hpp"
#include "icmesh/topology.hpp"

namespace icmesh {
namespace {

using FaceKey = std::array<Index, 3>;

struct FaceKeyHash {
  std::size_t operator()(const FaceKey& k) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ull;
    for (Index v : k) {
      h ^= v + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

FaceKey tet_face_key(const Tet& tet, int f) {
  const auto& fv = kTetFaces[f];
  FaceKey k{tet[fv[0]], tet[fv[1]], tet[fv[2]]};
  std::sort(k.begin(), k.end());
  return k;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Face adjacency over the band B_h plus, for each band tet, whether one of
// its faces has no neighbour anywhere in the mesh.
struct BandGraph {
  std::vector<Index> band;          // == part.b_idx
  std::vector<std::uint8_t> in_dms; // per band position
  SubsetAdjacency adjacency;
  std::vector<std::uint8_t> on_mesh_boundary;
};

BandGraph build_band_graph(const TetMesh& mesh, const BandPartition& part) {
  BandGraph g;
  g.band = part.b_idx;
  g.in_dms.assign(g.band.size(), 0);
  {
    std::size_t k = 0;
    for (Index t : part.dms_idx) {
      while (g.band[k] != t) ++k;  // both lists ascend; dms is a subset
      g.in_dms[k] = 1;
    }
  }
  g.adjacency = subset_face_adjacency(mesh, g.band);

  std::unordered_set<FaceKey, FaceKeyHash> open_faces;
  for (std::size_t k = 0; k < g.band.size(); ++k) {
    for (int f = 0; f < 4; ++f) {
      if (g.adjacency.neighbor[k][f] < 0) {
        open_faces.insert(tet_face_key(mesh.tets()[g.band[k]], f));
      }
    }
  }
  std::vector<std::uint8_t> in_band(mesh.tet_count(), 0);
  for (Index t : g.band) in_band[t] = 1;
  std::unordered_set<FaceKey, FaceKeyHash> covered;
  for (std::size_t t = 0; t < mesh.tet_count(); ++t) {
    if (in_band[t]) continue;
    for (int f = 0; f < 4; ++f) {
      const FaceKey key = tet_face_key(mesh.tets()[t], f);
      if (open_faces.count(key)) covered.insert(key);
    }
  }
  g.on_mesh_boundary.assign(g.band.size(), 0);
  for (std::size_t k = 0; k < g.band.size(); ++k) {
    for (int f = 0; f < 4; ++f) {
      if (g.adjacency.neighbor[k][f] < 0 &&
          !covered.count(tet_face_key(mesh.tets()[g.band[k]], f))) {
        g.on_mesh_boundary[k] = 1;
      }
    }
  }
  return g;
}

std::vector<TetGroup> adjacency_groups(const BandGraph& g) {
  const std::size_t n = g.band.size();
  DisjointSets sets(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!g.in_dms[k]) continue;
    for (std::int64_t nb : g.adjacency.neighbor[k]) {
      if (nb >= 0 && g.in_dms[nb]) sets.unite(k, static_cast<std::size_t>(nb));
    }
  }
  std::vector<std::int64_t> group_of_root(n, -1);
  std::vector<TetGroup> groups;
  for (std::size_t k = 0; k < n; ++k) {
    if (!g.in_dms[k]) continue;
    const std::size_t root = sets.find(k);
    if (group_of_root[root] < 0) {
      group_of_root[root] = static_cast<std::int64_t>(groups.size());
      groups.push_back({GroupKind::kPore, {}});
    }
    TetGroup& group = groups[group_of_root[root]];
    group.tets.push_back(g.band[k]);
    bool crosses_side = g.on_mesh_boundary[k] != 0;
    for (std::int64_t nb : g.adjacency.neighbor[k]) {
      if (nb >= 0 && !g.in_dms[nb]) crosses_side = true;
    }
    if (crosses_side) group.kind = GroupKind::kOuter;
  }
  return groups;
}

// dmo tets that reach neither the rectangle nor the box sides.
std::size_t count_isolated_pockets(const BandGraph& g) {
  const std::size_t n = g.band.size();
  DisjointSets sets(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (g.in_dms[k]) continue;
    for (std::int64_t nb : g.adjacency.neighbor[k]) {
      if (nb >= 0 && !g.in_dms[nb]) sets.unite(k, static_cast<std::size_t>(nb));
    }
  }
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<std::uint8_t> anchored(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    if (g.in_dms[k]) continue;
    const std::size_t root = sets.find(k);
    seen[root] = 1;
    bool anchor = g.on_mesh_boundary[k] != 0;
    for (std::int64_t nb : g.adjacency.neighbor[k]) {
      if (nb >= 0 && g.in_dms[nb]) anchor = true;
    }
    if (anchor) anchored[root] = 1;
  }
  std::size_t pockets = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (seen[k] && !anchored[k]) ++pockets;
  }
  return pockets;
}

bool protein_has_pore(const TriSurfaceMesh& protein, const MembraneSlab& slab) {
  const PlanarLoopSet loops =
      cross_section_loops(protein, 0.5 * (slab.z1 + slab.z2));
  return std::any_of(loops.depth.begin(), loops.depth.end(),
                     [](int d) { return d % 2 == 1; });
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - start_).count();
    start_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

BandRect interception_rectangle(const TriSurfaceMesh& surface,
                                const MembraneSlab& slab, double tau) {
  if (!(tau > 0.0)) {
    throw Error(ErrorCode::kInvalidConfig,
                "tau must be positive, got " + std::to_string(tau));
  }
  double x_lo = std::numeric_limits<double>::infinity();
  double x_hi = -x_lo;
  double y_lo = x_lo;
  double y_hi = -x_lo;
  bool any = false;
  const auto take = [&](double x, double y) {
    x_lo = std::min(x_lo, x);
    x_hi = std::max(x_hi, x);
    y_lo = std::min(y_lo, y);
    y_hi = std::max(y_hi, y);
    any = true;
  };

  for (std::size_t t = 0; t < surface.triangle_count(); ++t) {
    const auto corners = surface.corners(t);
    const bool touches = std::any_of(
        corners.begin(), corners.end(),
        [&](const Point3& p) { return slab.contains_z(p.z); });
    if (touches) {
      for (const Point3& p : corners) take(p.x, p.y);
      continue;
    }
    for (int k = 0; k < 3; ++k) {
      const Point3& p = corners[k];
      const Point3& q = corners[(k + 1) % 3];
      for (double z : {slab.z1, slab.z2}) {
        if ((p.z < z) != (q.z < z)) {
          const double s = (z - p.z) / (q.z - p.z);
          take(p.x + s * (q.x - p.x), p.y + s * (q.y - p.y));
        }
      }
    }
  }
  if (!any) {
    throw Error(ErrorCode::kProteinMissesSlab,
                "no part of the protein surface lies in z in [" +
                    std::to_string(slab.z1) + ", " + std::to_string(slab.z2) +
                    "]");
  }
  return {x_lo - tau, x_hi + tau, y_lo - tau, y_hi + tau, tau};
}

BandPartition band_partition(const TetMesh& mesh, const BoxDomain& box,
                             const BandRect& rect, const MembraneSlab& slab) {
  BandPartition part;
  for (std::size_t t = 0; t < mesh.tet_count(); ++t) {
    if (mesh.label(t) != RegionLabel::kSolvent) continue;
    const Point3 c = mesh.centroid(t);
    if (!slab.contains_z(c.z)) continue;
    if (c.x < box.lx1 || c.x > box.lx2 || c.y < box.ly1 || c.y > box.ly2) {
      continue;
    }
    const Index idx = static_cast<Index>(t);
    part.b_idx.push_back(idx);
    if (rect.contains(c.x, c.y)) {
      part.dms_idx.push_back(idx);
    } else {
      part.dmo_idx.push_back(idx);
    }
  }
  return part;
}

BandBoundarySplit split_band_boundary(const TetMesh& mesh,
                                      const BandPartition& part,
                                      const BandRect& rect, bool expect_pore) {
  if (part.dms_idx.empty()) {
    throw Error(ErrorCode::kEmptySubset, "no band tets over the rectangle");
  }
  const TriSurfaceMesh boundary = boundary_surface(mesh, part.dms_idx);
  std::vector<TriSurfaceMesh> components =
      surface_connected_components(boundary);

  BandBoundarySplit split;
  split.component_count = components.size();
  std::size_t outer_count = 0;
  for (TriSurfaceMesh& component : components) {
    const bool pore = std::all_of(
        component.vertices().begin(), component.vertices().end(),
        [&](const Point3& p) { return rect.strictly_inside_core(p.x, p.y); });
    if (pore) {
      split.pore_surfaces.push_back(std::move(component));
    } else {
      ++outer_count;
      split.outer_surface = std::move(component);
    }
  }
  if (outer_count != 1) {
    throw Error(ErrorCode::kAmbiguousOuter,
                std::to_string(outer_count) +
                    " boundary components reach the rectangle's sides; "
                    "expected exactly one");
  }
  if (expect_pore && split.pore_surfaces.empty()) {
    throw Error(ErrorCode::kPoreNotSeparated,
                "the protein has a pore at the slab but no closed pore "
                "surface was separated; increase tau, check Z1/Z2, or "
                "refine h_m");
  }
  return split;
}

BandClassification classify_band_tets(
    const TetMesh& mesh, const BandPartition& part,
    const std::vector<TriSurfaceMesh>& pore_surfaces) {
  std::vector<ClosedSurfaceTester> testers;
  testers.reserve(pore_surfaces.size());
  for (const TriSurfaceMesh& pore : pore_surfaces) testers.emplace_back(pore);

  BandClassification out;
  for (Index t : part.dms_idx) {
    const Point3 c = mesh.centroid(t);
    bool inside = false;
    for (const ClosedSurfaceTester& tester : testers) {
      const TriSurfaceMesh& pore = tester.surface();
      if (!pore.aabb().contains(c, pore.epsilon())) continue;
      try {
        inside = tester.contains(c);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kDegenerateQuery) throw;
        try {
          inside = winding_number_inclusion(c, pore);
        } catch (const Error& on_boundary) {
          if (on_boundary.code() != ErrorCode::kOnBoundary) throw;
          throw Error(ErrorCode::kDegenerateQuery,
                      "centroid of tet " + std::to_string(t) +
                          " lies on a pore surface");
        }
      }
      if (inside) break;
    }
    (inside ? out.s_s : out.s_m).push_back(t);
  }
  return out;
}

std::vector<TetGroup> classify_by_adjacency(const TetMesh& mesh,
                                            const BandPartition& part,
                                            const BandRect& /*rect*/) {
  return adjacency_groups(build_band_graph(mesh, part));
}

SubmeshCount count_submesh(const TetMesh& mesh,
                           std::optional<RegionLabel> label) {
  SubmeshCount count;
  std::vector<std::uint8_t> used(mesh.vertex_count(), 0);
  for (std::size_t t = 0; t < mesh.tet_count(); ++t) {
    if (label && mesh.label(t) != *label) continue;
    ++count.tets;
    for (Index v : mesh.tets()[t]) used[v] = 1;
  }
  count.vertices = static_cast<std::size_t>(
      std::count(used.begin(), used.end(), std::uint8_t{1}));
  return count;
}

namespace {

SubmeshCount count_tets(const TetMesh& mesh, const std::vector<Index>& tets) {
  SubmeshCount count;
  std::vector<std::uint8_t> used(mesh.vertex_count(), 0);
  for (Index t : tets) {
    for (Index v : mesh.tets()[t]) used[v] = 1;
  }
  count.tets = tets.size();
  count.vertices = static_cast<std::size_t>(
      std::count(used.begin(), used.end(), std::uint8_t{1}));
  return count;
}

double label_volume(const TetMesh& mesh, RegionLabel label) {
  double v = 0.0;
  for (std::size_t t = 0; t < mesh.tet_count(); ++t) {
    if (mesh.label(t) == label) v += mesh.volume(t);
  }
  return v;
}

void finish_census(const TetMesh& mesh, ExtractionReport& report) {
  report.full = count_submesh(mesh, std::nullopt);
  report.protein = count_submesh(mesh, RegionLabel::kProtein);
  report.solvent = count_submesh(mesh, RegionLabel::kSolvent);
  report.membrane = count_submesh(mesh, RegionLabel::kMembrane);
  report.protein_volume = label_volume(mesh, RegionLabel::kProtein);
  report.solvent_volume = label_volume(mesh, RegionLabel::kSolvent);
  report.membrane_volume = label_volume(mesh, RegionLabel::kMembrane);
}

}  // namespace

ExtractionResult extract_regions(const TetMesh& mesh,
                                 const TriSurfaceMesh& protein_surface,
                                 const MembraneSlab& slab,
                                 const ExtractionOptions& options) {
  if (!slab.valid()) {
    throw Error(ErrorCode::kInvalidConfig, "membrane slab needs z1 < z2");
  }
  if (mesh.empty()) throw Error(ErrorCode::kEmptyMesh, "no tetrahedra");
  for (std::size_t t = 0; t < mesh.tet_count(); ++t) {
    const RegionLabel l = mesh.label(t);
    if (l != RegionLabel::kProtein && l != RegionLabel::kSolvent) {
      throw Error(ErrorCode::kInvalidMesh,
                  "tet " + std::to_string(t) + " has label " +
                      std::to_string(static_cast<int>(l)) +
                      "; extraction expects labels 1 and 2 only");
    }
  }
  const double tau = options.tau.value_or(options.h_m);

  ExtractionResult result{mesh, {}};
  ExtractionReport& report = result.report;
  report.expanded_solvent = count_submesh(mesh, RegionLabel::kSolvent);
  Stopwatch clock;
  Stopwatch total;

  const AABB extent = mesh.aabb();
  const BoxDomain box{extent.min.x, extent.max.x, extent.min.y,
                      extent.max.y, extent.min.z, extent.max.z};

  const bool band_empty = [&] {
    for (std::size_t t = 0; t < mesh.tet_count(); ++t) {
      if (mesh.label(t) == RegionLabel::kSolvent &&
          slab.contains_z(mesh.centroid(t).z)) {
        return false;
      }
    }
    return true;
  }();
  if (band_empty) {
    report.warnings.push_back("no expanded-solvent tets in the slab");
    finish_census(result.mesh, report);
    report.timings.push_back({"total", total.lap()});
    return result;
  }

  // Step 1
  const BandRect rect = interception_rectangle(protein_surface, slab, tau);
  report.rect = rect;
  report.timings.push_back({"step1_rectangle", clock.lap()});

  // Step 2
  const BandPartition part = band_partition(mesh, box, rect, slab);
  report.band_tets = part.b_idx.size();
  report.dms_tets = part.dms_idx.size();
  report.dmo_tets = part.dmo_idx.size();
  report.timings.push_back({"step2_partition", clock.lap()});

  // Step 3
  bool expect_pore = false;
  try {
    expect_pore = protein_has_pore(protein_surface, slab);
  } catch (const Error& e) {
    report.warnings.push_back(std::string("pore detection skipped: ") +
                              e.what());
  }
  const BandBoundarySplit split =
      split_band_boundary(mesh, part, rect, expect_pore);
  report.component_count = split.component_count;
  report.pore_component_count = split.pore_surfaces.size();
  for (const TriSurfaceMesh& pore : split.pore_surfaces) {
    report.pore_volumes.push_back(std::abs(enclosed_volume(pore)));
  }
  report.timings.push_back({"step3_split", clock.lap()});

  // Step 4
  BandClassification cls = classify_band_tets(mesh, part, split.pore_surfaces);
  report.timings.push_back({"step4_ray_tests", clock.lap()});

  const BandGraph graph = build_band_graph(mesh, part);
  const std::vector<TetGroup> groups = adjacency_groups(graph);
  report.isolated_band_pockets = count_isolated_pockets(graph);
  std::vector<Index> oracle_pore;
  for (const TetGroup& g : groups) {
    if (g.kind == GroupKind::kPore) {
      oracle_pore.insert(oracle_pore.end(), g.tets.begin(), g.tets.end());
    }
  }
  std::sort(oracle_pore.begin(), oracle_pore.end());
  if (oracle_pore != cls.s_s) {
    std::vector<Index> diff;
    std::set_symmetric_difference(cls.s_s.begin(), cls.s_s.end(),
                                  oracle_pore.begin(), oracle_pore.end(),
                                  std::back_inserter(diff));
    report.classification_disagreements = diff.size();
    report.warnings.push_back(
        std::to_string(diff.size()) +
        " band tets classified differently by ray tests and face "
        "adjacency; adjacency result kept");
    BandClassification fixed;
    fixed.s_s = oracle_pore;
    std::set_difference(part.dms_idx.begin(), part.dms_idx.end(),
                        oracle_pore.begin(), oracle_pore.end(),
                        std::back_inserter(fixed.s_m));
    cls = std::move(fixed);
  }
  if (report.isolated_band_pockets > 0) {
    report.warnings.push_back(
        std::to_string(report.isolated_band_pockets) +
        " solvent pockets in the slab outside the rectangle were relabelled "
        "as membrane");
  }
  report.timings.push_back({"step4_adjacency_check", clock.lap()});

  report.s_s = cls.s_s.size();
  report.s_m = cls.s_m.size();
  report.pore_solvent = count_tets(mesh, cls.s_s);

  // Steps 5 and 6
  for (Index t : cls.s_m) result.mesh.set_label(t, RegionLabel::kMembrane);
  for (Index t : part.dmo_idx) result.mesh.set_label(t, RegionLabel::kMembrane);
  report.timings.push_back({"step5_relabel", clock.lap()});

  finish_census(result.mesh, report);
  report.timings.push_back({"step6_census", clock.lap()});
  report.timings.push_back({"total", total.lap()});
  return result;
}

}  // namespace icmesh
