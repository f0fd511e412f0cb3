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

#include <optional>
#include <string>
#include <vector>

#include "icmesh/geometry.hpp"
#include "icmesh/surface_mesh.hpp"
#include "icmesh/tet_mesh.hpp"

namespace icmesh {

// [a, b] x [c, d]: xy-extent of the protein surface inside the slab, grown
// by tau.
struct BandRect {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
  double tau = 0.0;

  bool contains(double x, double y) const {
    return x >= a && x <= b && y >= c && y <= d;
  }
  // The un-grown protein extent [a + tau, b - tau] x [c + tau, d - tau].
  bool strictly_inside_core(double x, double y) const {
    return x > a + tau && x < b - tau && y > c + tau && y < d - tau;
  }
};

// Throws kProteinMissesSlab when no part of the surface meets [z1, z2].
BandRect interception_rectangle(const TriSurfaceMesh& surface,
                                const MembraneSlab& slab, double tau);

// Label-2 tets whose centroids fall in the slab (b_idx), split into the part
// over the rectangle (dms_idx) and the rest (dmo_idx). Index lists ascend.
struct BandPartition {
  std::vector<Index> b_idx;
  std::vector<Index> dms_idx;
  std::vector<Index> dmo_idx;
};

BandPartition band_partition(const TetMesh& mesh, const BoxDomain& box,
                             const BandRect& rect, const MembraneSlab& slab);

struct BandBoundarySplit {
  std::vector<TriSurfaceMesh> pore_surfaces;
  TriSurfaceMesh outer_surface;
  std::size_t component_count = 0;
};

// Boundary of the dms_idx tets split into edge-connected components. A
// component is a pore iff all of its vertices lie strictly inside the
// un-grown rectangle core; exactly one other component must remain.
//
// Throws kEmptySubset (no dms tets), kAmbiguousOuter (several non-pore
// components) and, when expect_pore is set and nothing was found,
// kPoreNotSeparated.
BandBoundarySplit split_band_boundary(const TetMesh& mesh,
                                      const BandPartition& part,
                                      const BandRect& rect,
                                      bool expect_pore = false);

struct BandClassification {
  std::vector<Index> s_s;  // centroid inside some pore surface
  std::vector<Index> s_m;  // everything else
};

// Ray-parity classification of every dms tet centroid against the pore
// surfaces. A degenerate ray query falls back to the winding number; a
// centroid on a pore surface raises kDegenerateQuery naming the tet.
BandClassification classify_band_tets(
    const TetMesh& mesh, const BandPartition& part,
    const std::vector<TriSurfaceMesh>& pore_surfaces);

enum class GroupKind { kPore, kOuter };

struct TetGroup {
  GroupKind kind = GroupKind::kOuter;
  std::vector<Index> tets;  // ascending mesh indices
};

// Independent route to the same split: connected components of the
// face-adjacency graph over dms_idx. A group is outer iff one of its tets
// shares a face with a dmo tet (it crosses the rectangle's side) or lies on
// the mesh boundary.
std::vector<TetGroup> classify_by_adjacency(const TetMesh& mesh,
                                            const BandPartition& part,
                                            const BandRect& rect);

struct SubmeshCount {
  std::size_t vertices = 0;
  std::size_t tets = 0;
};

struct StepTiming {
  std::string name;
  double seconds = 0.0;
};

struct ExtractionReport {
  SubmeshCount expanded_solvent;  // label 2 before extraction
  SubmeshCount pore_solvent;      // s_s
  SubmeshCount full;              // whole mesh
  SubmeshCount solvent;           // label 2 after
  SubmeshCount membrane;          // label 3 after
  SubmeshCount protein;           // label 1

  BandRect rect;
  std::size_t band_tets = 0;
  std::size_t dms_tets = 0;
  std::size_t dmo_tets = 0;
  std::size_t s_s = 0;
  std::size_t s_m = 0;

  std::size_t component_count = 0;
  std::size_t pore_component_count = 0;
  std::vector<double> pore_volumes;

  double protein_volume = 0.0;
  double solvent_volume = 0.0;
  double membrane_volume = 0.0;

  // Label-2 pockets of the band outside the rectangle that touch neither
  // the rectangle nor the box sides. They are relabelled like the rest of
  // dmo_idx and only reported here.
  std::size_t isolated_band_pockets = 0;
  std::size_t classification_disagreements = 0;

  std::vector<std::string> warnings;
  std::vector<StepTiming> timings;
};

struct ExtractionOptions {
  double h_m = 1.0;
  std::optional<double> tau;  // defaults to h_m
};

struct ExtractionResult {
  TetMesh mesh;
  ExtractionReport report;
};

// Relabels label-2 tets into solvent (2) and membrane (3); vertices,
// connectivity and label-1 tets are left as they are. An empty band leaves
// the mesh unchanged.
ExtractionResult extract_regions(const TetMesh& mesh,
                                 const TriSurfaceMesh& protein_surface,
                                 const MembraneSlab& slab,
                                 const ExtractionOptions& options);

// Census of one label (or of all tets when label is unset).
SubmeshCount count_submesh(const TetMesh& mesh,
                           std::optional<RegionLabel> label);

}  // namespace icmesh
